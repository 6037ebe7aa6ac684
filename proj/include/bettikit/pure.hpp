#pragma once

#include "bettikit/table.hpp"

namespace bettikit {

// Normalized betti table of a pure resolution with the given degree
// sequence, together with its multiplicity.
struct PureDiagram {
    DegreeSequence degrees;
    BettiTable table;
    Rational multiplicity;
};

// Herzog-Kuhl product formula: column 0 holds 1 at row d_0 and column p >= 1
// holds prod_{k>=1, k!=p} (d_k - d_0) / |d_k - d_p| at row d_p - p.
// The multiplicity is prod_{k>=1} (d_k - d_0) / l!.
PureDiagram hk_diagram(const DegreeSequence& d);

// The diagram multiplied by the lcm of its denominators, for display.
BettiTable cleared_table(const PureDiagram& diagram);

// (0, q+1, q+2, ..., q+e). Requires e, q >= 1.
DegreeSequence family_deq(int e, int q);

// (0, q+1, ..., q+e-1, 2q+e). Requires e >= 2, q >= 1.
DegreeSequence family_tilde(int e, int q);

// C(n, k) by the multiplicative formula; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

// Largest possible kappa_{p,q} in the first nontrivial strand q for
// codimension e: C(p+q-1, q) C(e+q, p+q). Zero for p > e.
Integer kappa_max(int p, int q, int e);

// Next-to-maximal bound on the linear strand: p C(e+1, p+1) - C(e, p-1).
// Zero for p >= e.
Integer kappa_next_max(int p, int e);

}  // namespace bettikit
