#include "bettikit/decompose.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>

namespace bettikit {

BettiTable Decomposition::reconstruct() const
{
    BettiTable out;
    for (const auto& term : terms)
        out = add(out, scale(hk_diagram(term.degrees).table, term.coefficient));
    return out;
}

Decomposition Decomposition::sorted_for_display() const
{
    Decomposition out = *this;
    std::stable_sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (a.degrees.length() != b.degrees.length())
            return a.degrees.length() < b.degrees.length();
        return a.degrees < b.degrees;
    });
    return out;
}

DegreeSequence top_strand(const BettiTable& t)
{
    if (t.empty())
        throw Error("top strand of an empty table");
    const int pd = t.projective_dimension();
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(pd) + 1);
    for (int p = 0; p <= pd; ++p) {
        auto row = t.column_min_row(p);
        if (!row)
            throw NoColumn(p);
        int degree = p + *row;
        if (!degrees.empty() && degree <= degrees.back())
            throw StrandNotIncreasing(p);
        degrees.push_back(degree);
    }
    return DegreeSequence(std::move(degrees));
}

std::size_t default_iteration_cap(const BettiTable& t)
{
    if (t.empty())
        return 10;
    auto columns = static_cast<std::size_t>(t.projective_dimension() + 1);
    auto rows = static_cast<std::size_t>(*t.regularity() - std::min(0, *t.min_row()) + 1);
    return 10 * columns * rows;
}

Decomposition bs_decompose(const BettiTable& t, std::optional<std::size_t> max_iterations)
{
    if (t.empty())
        throw Error("cannot decompose an empty table");
    const std::size_t cap = max_iterations.value_or(default_iteration_cap(t));

    Decomposition out;
    BettiTable rest = t;
    while (!rest.empty()) {
        if (out.terms.size() >= cap)
            throw IterationLimitExceeded(cap);

        DegreeSequence d;
        try {
            d = top_strand(rest);
        } catch (const NoColumn& err) {
            throw NotInCone(err.what());
        } catch (const StrandNotIncreasing& err) {
            throw NotInCone(err.what());
        }

        PureDiagram pure = hk_diagram(d);
        std::optional<Rational> c;
        for (int p = 0; p <= d.length(); ++p) {
            Rational ratio = rest.at(p, d.row(p)) / pure.table.at(p, d.row(p));
            if (!c || ratio < *c)
                c = ratio;
        }

        try {
            rest = subtract_checked(rest, scale(pure.table, *c));
        } catch (const NegativeEntry& err) {
            throw NotInCone(err.what());
        }
        out.terms.push_back({*c, std::move(d)});
    }
    return out;
}

Rational multiplicity_from_decomposition(const Decomposition& dec, int codim_length)
{
    Rational total(0);
    for (const auto& term : dec.terms)
        if (term.degrees.length() == codim_length)
            total += term.coefficient * hk_diagram(term.degrees).multiplicity;
    return total;
}

bool chain_check(const Decomposition& dec)
{
    for (std::size_t i = 1; i < dec.terms.size(); ++i) {
        const auto& a = dec.terms[i - 1].degrees;
        const auto& b = dec.terms[i].degrees;
        if (a.length() < b.length())
            return false;
        for (int p = 0; p <= b.length(); ++p)
            if (a[p] > b[p])
                return false;
    }
    return true;
}

}  // namespace bettikit
