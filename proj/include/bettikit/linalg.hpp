#pragma once

#include "bettikit/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bettikit {

// Which coefficient field a computation runs over.
struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Prime;
    std::uint32_t prime = 32003;

    static FieldSpec rational() { return {Kind::Rational, 0}; }
    static FieldSpec gf(std::uint32_t p);

    bool is_rational() const { return kind == Kind::Rational; }
    // "rational" or "gf 32003", the ideal-file spelling.
    std::string name() const;
    static FieldSpec parse(std::string_view text);

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint32_t n);

class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    // Throws when the denominator vanishes mod p.
    Element from_rational(const Rational& r) const;
    Rational to_rational(Element a) const { return Rational(a); }

private:
    std::uint32_t p_;
};

class RationalField {
public:
    using Element = Rational;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(const Element& a) const { return a == 0; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return 1 / a; }
    Element from_rational(const Rational& r) const { return r; }
    Rational to_rational(const Element& a) const { return a; }
};

// Row-major dense matrix.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Gaussian elimination over GF(p).
std::size_t rank(const PrimeField& field, DenseMatrix<PrimeField::Element> m);

// Rank over Q by fraction-free (Bareiss) elimination: each row is cleared
// of denominators and elimination proceeds over the integers.
std::size_t rank(const RationalField& field, const DenseMatrix<Rational>& m);
std::size_t bareiss_rank(DenseMatrix<Integer> m);

// Sparse integer row: (column, nonzero value), columns strictly increasing.
using SparseIntegerRow = std::vector<std::pair<std::size_t, Integer>>;

// Rank over Q of sparse integer rows, fraction-free: a row is reduced by
// r <- pivot * r - lead * pivot_row and then divided by its content, so all
// arithmetic stays in Z. Suited to the very sparse Koszul differentials.
std::size_t sparse_fraction_free_rank(std::vector<SparseIntegerRow> rows);

// Reduced row echelon form; pivots are chosen at the leftmost nonzero column.
template <class Field>
struct RowEchelon {
    DenseMatrix<typename Field::Element> rows;  // rank x cols
    std::vector<std::size_t> pivots;            // pivot column of each row
};

template <class Field>
RowEchelon<Field> reduced_row_echelon(const Field& field, DenseMatrix<typename Field::Element> m)
{
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && field.is_zero(m(pivot, c)))
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.swap_rows(r, pivot);
        auto scale = field.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) = field.mul(m(r, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || field.is_zero(m(i, c)))
                continue;
            auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!field.is_zero(m(r, j)))
                    m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    DenseMatrix<typename Field::Element> rows(r, m.cols(), field.zero());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows(i, j) = m(i, j);
    return {std::move(rows), std::move(pivots)};
}

// A matrix over a FieldSpec, entries stored as canonical rationals (residues
// in [0, p) for prime fields). The type-erased surface of the Koszul engine.
class FieldMatrix {
public:
    FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return entries_.rows(); }
    std::size_t cols() const { return entries_.cols(); }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_(r, c); }
    void set(std::size_t r, std::size_t c, const Rational& value);

    bool is_zero() const;
    std::size_t rank() const;
    FieldMatrix operator*(const FieldMatrix& other) const;

private:
    FieldSpec field_;
    DenseMatrix<Rational> entries_;
};

}  // namespace bettikit
