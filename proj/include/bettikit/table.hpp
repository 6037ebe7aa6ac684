#pragma once

#include "bettikit/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bettikit {

// Cell coordinates: p is the homological column, q the row, so the entry
// lives in internal degree p + q.
struct Cell {
    int p = 0;
    int q = 0;
    auto operator<=>(const Cell&) const = default;
};

// Strictly increasing degrees (d_0 < d_1 < ... < d_l). Length l = size - 1.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);
    DegreeSequence(std::initializer_list<int> degrees);

    int length() const { return static_cast<int>(degrees_.size()) - 1; }
    int operator[](std::size_t i) const { return degrees_[i]; }
    std::span<const int> degrees() const { return degrees_; }
    int front() const { return degrees_.front(); }
    int back() const { return degrees_.back(); }

    // Row of column p in the betti table: d_p - p.
    int row(int p) const { return degrees_[static_cast<std::size_t>(p)] - p; }

    // "0,3,4,5"
    std::string to_string() const;
    static DegreeSequence parse(std::string_view text);

    auto operator<=>(const DegreeSequence&) const = default;

private:
    std::vector<int> degrees_{0};
};

// Sparse table of nonnegative rationals. Zero cells are never stored, so
// structural equality is value equality.
class BettiTable {
public:
    using Entries = std::map<Cell, Rational>;

    BettiTable() = default;
    BettiTable(std::initializer_list<std::pair<Cell, Rational>> entries);

    // Stores value at (p, q); zero erases. Negative values throw NegativeEntry.
    void set(int p, int q, const Rational& value);
    Rational at(int p, int q) const;
    bool contains(int p, int q) const { return entries_.contains(Cell{p, q}); }

    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Max p over stored entries; -1 when empty.
    int projective_dimension() const;
    // Max q over stored entries; nullopt when empty.
    std::optional<int> regularity() const;
    std::optional<int> min_row() const;
    // Smallest q with an entry in column p.
    std::optional<int> column_min_row(int p) const;
    bool all_integer() const;

    // Rows moved by `rows` (q -> q + rows).
    BettiTable shifted(int rows) const;

    bool operator==(const BettiTable&) const = default;

private:
    Entries entries_;
};

BettiTable add(const BettiTable& a, const BettiTable& b);
BettiTable scale(const BettiTable& a, const Rational& c);
BettiTable subtract_checked(const BettiTable& a, const BettiTable& b);

// sum (-1)^p kappa_{p,q} t^{p+q}; all entries must be integers.
IntPolynomial hilbert_numerator(const BettiTable& a);

}  // namespace bettikit
