#include "bettikit/bounds.hpp"

#include "bettikit/decompose.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/pure.hpp"

namespace bettikit {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::AllMax:
        return "AllMax";
    case Verdict::NoneMax:
        return "NoneMax";
    case Verdict::Violation:
        return "Violation";
    case Verdict::MixedMaxInconsistent:
        return "MixedMaxInconsistent";
    }
    return "?";
}

std::optional<int> first_nontrivial_strand(const BettiTable& t)
{
    if (t.at(0, 0) != 1)
        throw Error("malformed column 0: expected kappa_{0,0} = 1");
    for (const auto& [cell, value] : t.entries())
        if (cell.p == 0 && cell.q != 0)
            throw Error("malformed column 0: unexpected entry at (0," + std::to_string(cell.q) + ")");
    for (const auto& [cell, value] : t.entries())
        if (cell.p == 1 && cell.q >= 1)
            return cell.q;
    return std::nullopt;
}

namespace {

std::optional<Rational> decomposed_degree(const BettiTable& t, int e)
{
    try {
        return multiplicity_from_decomposition(bs_decompose(t), e);
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Fills verdict fields from per_p; bounded columns are 1..last_bounded.
void classify(StrandReport& r, int last_bounded)
{
    std::optional<int> violation;
    std::optional<int> first_attained;
    bool all = last_bounded >= 1;
    for (const auto& c : r.per_p) {
        if (c.observed > Rational(c.bound) && !violation)
            violation = c.p;
        if (c.p <= last_bounded) {
            if (c.attains_max && !first_attained)
                first_attained = c.p;
            all = all && c.attains_max;
        }
    }
    if (violation) {
        r.verdict = Verdict::Violation;
        r.verdict_p = violation;
    } else if (all) {
        r.verdict = Verdict::AllMax;
    } else if (!first_attained) {
        r.verdict = Verdict::NoneMax;
    } else {
        r.verdict = Verdict::MixedMaxInconsistent;
        r.verdict_p = first_attained;
    }
}

}  // namespace

StrandReport check_first_strand(const BettiTable& t, const Assumptions& a, int q)
{
    if (a.codim_e < 1)
        throw Error("codimension must be at least 1");
    if (q < 1)
        throw Error("strand index must be at least 1");
    const int e = a.codim_e;

    StrandReport r;
    r.kind = "max";
    r.q_strand = q;
    r.assumptions = a;

    const int last = std::max(e, t.projective_dimension());
    for (int p = 1; p <= last; ++p) {
        StrandComparison c{p, t.at(p, q), kappa_max(p, q, e), false};
        c.attains_max = p <= e && c.observed == Rational(c.bound);
        if (p <= e || c.observed != 0)
            r.per_p.push_back(std::move(c));
    }
    classify(r, e);
    r.degree_observed = decomposed_degree(t, e);

    if (r.verdict == Verdict::AllMax) {
        r.degree_predicted = Rational(binomial(e + q, q));
        // Rows other than 0 and q empty, nothing beyond column e.
        bool shape = t.projective_dimension() <= e;
        for (const auto& [cell, value] : t.entries())
            if (cell.q != 0 && cell.q != q)
                shape = false;
        r.shape_holds = shape;
    }

    if (!a.nd_q)
        r.notes.push_back("ND(" + std::to_string(q) + ") not asserted: the upper bounds need not apply");
    if (r.verdict == Verdict::Violation && a.nd_q)
        r.notes.push_back("bound exceeded although ND(" + std::to_string(q)
                          + ") was asserted: the assertion is false for this input");
    if (r.verdict == Verdict::MixedMaxInconsistent)
        r.notes.push_back(a.nd_q ? "some but not all bounds attained: impossible under ND(q)"
                                 : "some but not all bounds attained (only contradictory under ND(q))");
    if (t.projective_dimension() == e)
        r.notes.push_back("table width equals the asserted codimension (ACM)");
    return r;
}

StrandReport check_next_to_max(const BettiTable& t, const Assumptions& a)
{
    if (a.codim_e < 2)
        throw Error("next-to-maximal bounds need codimension e >= 2");
    const int e = a.codim_e;

    StrandReport r;
    r.kind = "next-to-max";
    r.q_strand = 1;
    r.assumptions = a;

    const int last = std::max(e, t.projective_dimension());
    for (int p = 1; p <= last; ++p) {
        StrandComparison c{p, t.at(p, 1), kappa_next_max(p, e), false};
        c.attains_max = p <= e - 1 && c.observed == Rational(c.bound);
        if (p <= e - 1 || c.observed != 0)
            r.per_p.push_back(std::move(c));
    }
    classify(r, e - 1);
    r.degree_observed = decomposed_degree(t, e);

    if (r.verdict == Verdict::AllMax) {
        r.degree_predicted = Rational(e + 2);
        // kappa_{e,2} = 1 and nothing else outside row 1, columns 1..e-1.
        bool shape = t.at(e, 2) == 1;
        for (const auto& [cell, value] : t.entries()) {
            bool allowed = (cell.p == 0 && cell.q == 0) || (cell.q == 1 && cell.p >= 1 && cell.p <= e - 1)
                           || (cell.p == e && cell.q == 2);
            shape = shape && allowed;
        }
        r.shape_holds = shape;
    }

    if (!a.lgp)
        r.notes.push_back("linearly general position not asserted: the bounds need not apply");
    if (r.degree_observed && *r.degree_observed < e + 2)
        r.notes.push_back("degree hypothesis deg >= e+2 fails (degree " + to_string(*r.degree_observed) + " < "
                          + std::to_string(e + 2) + ")");
    if (r.verdict == Verdict::MixedMaxInconsistent)
        r.notes.push_back("some but not all next-to-maximal bounds attained");
    return r;
}

bool check_Ndm(const BettiTable& t, int d, int m)
{
    if (d < 1 || m < 0)
        throw Error("N_{d,m} needs d >= 1 and m >= 0");
    for (const auto& [cell, value] : t.entries())
        if (cell.p <= m && cell.q >= d)
            return false;
    return true;
}

DegreeBounds degree_bounds(int e, int q)
{
    if (e < 1 || q < 1)
        throw Error("degree bounds need e, q >= 1");
    Integer b = binomial(e + q, q);
    return {b, b, "ND(" + std::to_string(q) + ")",
            "N_{" + std::to_string(q + 1) + "," + std::to_string(e) + "}"};
}

int suggested_codimension(const BettiTable& t) { return t.projective_dimension(); }

}  // namespace bettikit
