#pragma once

#include "bettikit/koszul.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bettikit {

struct SweepResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

// Every strictly increasing (0, d_1, ..., d_e) with lo <= d_1 and d_e <= hi.
std::vector<DegreeSequence> sequences_in_box(int e, int lo, int hi);

// Herzog-Kuhl entries and multiplicity of d^{e,q} against the binomial closed forms.
SweepResult sweep_family_closed_forms(int max_e, int max_q);
// pi(d~^{e,1}) against the next-to-maximal closed forms.
SweepResult sweep_tilde_family(int max_e);
// Upper bounds on the q-strand and the lower multiplicity bound over a box of
// degree sequences, with all four equality conditions equivalent to d = d^{e,q}.
SweepResult sweep_strand_bounds(int max_e, int max_q, int slack);
// Next-to-maximal values sit strictly below the maximal ones.
SweepResult sweep_next_below_max(int max_e);
// Cleared pure diagrams have Hilbert numerators divisible by (1 - t)^l.
SweepResult sweep_hk_exactness(int max_len, int max_degree);
// delta o delta = 0 on random small ideals.
SweepResult sweep_square_zero(std::size_t count, std::uint64_t seed);

// Homogeneous random ideal: 2..4 variables, 1..3 generators of degree 1..3.
Ideal random_ideal(std::mt19937_64& rng, FieldSpec field);

std::vector<SweepResult> run_selftest();

}  // namespace bettikit
