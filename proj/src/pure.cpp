#include "bettikit/pure.hpp"

#include "bettikit/errors.hpp"

namespace bettikit {

PureDiagram hk_diagram(const DegreeSequence& d)
{
    const int len = d.length();
    const int d0 = d[0];
    PureDiagram out{d, {}, Rational(1)};
    out.table.set(0, d.row(0), Rational(1));

    for (int p = 1; p <= len; ++p) {
        Rational entry(1);
        for (int k = 1; k <= len; ++k) {
            if (k == p)
                continue;
            Rational factor(d[k] - d0, std::abs(d[k] - d[p]));
            factor.canonicalize();
            entry *= factor;
        }
        out.table.set(p, d.row(p), entry);
    }

    Integer factorial = 1;
    Integer product = 1;
    for (int k = 1; k <= len; ++k) {
        product *= d[k] - d0;
        factorial *= k;
    }
    out.multiplicity = Rational(product, factorial);
    out.multiplicity.canonicalize();
    return out;
}

BettiTable cleared_table(const PureDiagram& diagram)
{
    Integer denominator = 1;
    for (const auto& [cell, value] : diagram.table.entries())
        denominator = lcm(denominator, value.get_den());
    return scale(diagram.table, Rational(denominator));
}

DegreeSequence family_deq(int e, int q)
{
    if (e < 1 || q < 1)
        throw Error("family d^{e,q} needs e >= 1 and q >= 1");
    std::vector<int> degrees{0};
    for (int k = 1; k <= e; ++k)
        degrees.push_back(q + k);
    return DegreeSequence(std::move(degrees));
}

DegreeSequence family_tilde(int e, int q)
{
    if (e < 2 || q < 1)
        throw Error("family d~^{e,q} needs e >= 2 and q >= 1");
    std::vector<int> degrees{0};
    for (int k = 1; k <= e - 1; ++k)
        degrees.push_back(q + k);
    degrees.push_back(2 * q + e);
    return DegreeSequence(std::move(degrees));
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

Integer kappa_max(int p, int q, int e)
{
    if (p < 1 || q < 1 || e < 1)
        throw Error("kappa_max needs p, q, e >= 1");
    if (p > e)
        return 0;
    return binomial(p + q - 1, q) * binomial(e + q, p + q);
}

Integer kappa_next_max(int p, int e)
{
    if (p < 1 || e < 2)
        throw Error("kappa_next_max needs p >= 1 and e >= 2");
    if (p >= e)
        return 0;
    return Integer(p) * binomial(e + 1, p + 1) - binomial(e, p - 1);
}

}  // namespace bettikit
