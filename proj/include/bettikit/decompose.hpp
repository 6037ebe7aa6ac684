#pragma once

#include "bettikit/pure.hpp"

#include <optional>
#include <vector>

namespace bettikit {

struct DecompositionTerm {
    Rational coefficient;
    DegreeSequence degrees;
    bool operator==(const DecompositionTerm&) const = default;
};

// Terms in peeling order.
struct Decomposition {
    std::vector<DecompositionTerm> terms;

    // sum_i x_i pi(d^i)
    BettiTable reconstruct() const;
    // Ordered by length, then lexicographically by degrees.
    Decomposition sorted_for_display() const;

    bool operator==(const Decomposition&) const = default;
};

// d_p = p + (smallest row with an entry in column p), for p = 0..pd(t).
DegreeSequence top_strand(const BettiTable& t);

// 10 (P+1) (rows+1), with rows the span of occupied rows.
std::size_t default_iteration_cap(const BettiTable& t);

// Greedy peeling: repeatedly subtract the largest multiple of the pure
// diagram on the top strand that keeps the table nonnegative.
Decomposition bs_decompose(const BettiTable& t, std::optional<std::size_t> max_iterations = std::nullopt);

// sum x_i e(d^i) over the terms of length codim_length.
Rational multiplicity_from_decomposition(const Decomposition& dec, int codim_length);

// Lengths non-increasing and degrees termwise non-decreasing along the list.
bool chain_check(const Decomposition& dec);

}  // namespace bettikit
