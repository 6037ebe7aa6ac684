#pragma once

#include "bettikit/table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bettikit {

// Geometric hypotheses the caller asserts; nothing here is verified.
struct Assumptions {
    bool nd_q = false;   // property ND(q)
    bool lgp = false;    // general zero-dimensional linear section in linearly general position
    int codim_e = 1;
};

enum class Verdict { AllMax, NoneMax, Violation, MixedMaxInconsistent };

std::string to_string(Verdict v);

struct StrandComparison {
    int p = 0;
    Rational observed;
    Integer bound;
    bool attains_max = false;
};

struct StrandReport {
    // Which bound was checked: "max" (first strand) or "next-to-max" (linear strand).
    std::string kind;
    int q_strand = 0;
    Assumptions assumptions;
    std::vector<StrandComparison> per_p;
    Verdict verdict = Verdict::NoneMax;
    // Column of the first violation, or of the first attained bound in the mixed case.
    std::optional<int> verdict_p;
    std::optional<Rational> degree_predicted;
    // Degree read off the table's decomposition (length-e part), when it decomposes.
    std::optional<Rational> degree_observed;
    // Resolution shape expected when every bound is attained; set only for AllMax.
    std::optional<bool> shape_holds;
    std::vector<std::string> notes;
};

// Smallest q >= 1 with an entry at (1, q). Throws unless column 0 is exactly {(0,0): 1}.
std::optional<int> first_nontrivial_strand(const BettiTable& t);

// Row q against C(p+q-1, q) C(e+q, p+q), including vanishing for p > e.
StrandReport check_first_strand(const BettiTable& t, const Assumptions& a, int q);

// Row 1 against p C(e+1, p+1) - C(e, p-1), including vanishing for p >= e.
StrandReport check_next_to_max(const BettiTable& t, const Assumptions& a);

// No entry at (p, q) with 0 <= p <= m and q >= d.
bool check_Ndm(const BettiTable& t, int d, int m);

struct DegreeBounds {
    Integer lower;  // under ND(q)
    Integer upper;  // under N_{q+1,e}
    std::string lower_hypothesis;
    std::string upper_hypothesis;
};

DegreeBounds degree_bounds(int e, int q);

// projective_dimension(t); meaningful as the codimension only for ACM inputs.
int suggested_codimension(const BettiTable& t);

}  // namespace bettikit
