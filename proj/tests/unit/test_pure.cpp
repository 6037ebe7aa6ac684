#include "bettikit/errors.hpp"
#include "bettikit/pure.hpp"

#include <doctest.h>

using namespace bettikit;

namespace {

// Pascal's triangle, independent of the multiplicative formula.
Integer pascal(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::vector<Integer> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> next(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

// Solves the Herzog-Kuhl equations sum_p (-1)^p beta_p (d_p - d_0)^j = 0,
// j = 1..l-1, with beta_0 = 1, by Gaussian elimination over Q. Returns beta_1..beta_l.
std::vector<Rational> herzog_kuhl_solution(const DegreeSequence& d)
{
    const int len = d.length();
    // unknowns beta_1..beta_l; equations j = 0..l-1 (j = 0 is sum (-1)^p beta_p = 0)
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(len), std::vector<Rational>(len + 1));
    for (int j = 0; j < len; ++j) {
        for (int p = 1; p <= len; ++p) {
            Rational power(1);
            for (int k = 0; k < j; ++k)
                power *= d[p] - d[0];
            a[j][p - 1] = (p % 2 ? -1 : 1) * power;
        }
        a[j][len] = j == 0 ? Rational(-1) : Rational(0);  // beta_0 term moved across
    }
    for (int c = 0; c < len; ++c) {
        int piv = c;
        while (a[piv][c] == 0)
            ++piv;
        std::swap(a[piv], a[c]);
        for (int r = 0; r < len; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c] / a[c][c];
            for (int k = c; k <= len; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rational> out;
    for (int c = 0; c < len; ++c)
        out.push_back(a[c][len] / a[c][c]);
    return out;
}

void check_diagram(const DegreeSequence& d, const std::vector<Rational>& entries, const std::vector<int>& rows,
                   const Rational& multiplicity)
{
    auto pd = hk_diagram(d);
    CHECK(pd.table.size() == entries.size());
    for (std::size_t p = 0; p < entries.size(); ++p)
        CHECK(pd.table.at(static_cast<int>(p), rows[p]) == entries[p]);
    CHECK(pd.multiplicity == multiplicity);
}

}  // namespace

TEST_CASE("oracle: the Herzog-Kuhl system reproduces the product formula")
{
    for (const DegreeSequence& d : {DegreeSequence{0, 3, 4, 5}, DegreeSequence{0, 2, 3, 5}, DegreeSequence{0, 2, 4, 5},
                                    DegreeSequence{0, 1, 4, 6, 9}, DegreeSequence{-2, 0, 3}}) {
        auto beta = herzog_kuhl_solution(d);
        auto pd = hk_diagram(d);
        for (int p = 1; p <= d.length(); ++p)
            CHECK(pd.table.at(p, d.row(p)) == beta[p - 1]);
    }
}

TEST_CASE("hk_diagram examples")
{
    check_diagram({0, 3, 4, 5}, {1, 10, 15, 6}, {0, 2, 2, 2}, 10);
    check_diagram({0, 2, 3, 5}, {1, 5, 5, 1}, {0, 1, 1, 2}, 5);
    check_diagram({0, 2, 4, 5}, {1, Rational(10, 3), 5, Rational(8, 3)}, {0, 1, 2, 2}, Rational(20, 3));
    check_diagram({0}, {1}, {0}, 1);
}

TEST_CASE("shifted degree sequences keep column 0 at row d_0")
{
    auto shifted = hk_diagram({2, 5, 6, 7});
    auto base = hk_diagram({0, 3, 4, 5});
    CHECK(shifted.table == base.table.shifted(2));
    CHECK(shifted.multiplicity == base.multiplicity);
}

TEST_CASE("cleared_table multiplies by the lcm of denominators")
{
    CHECK(cleared_table(hk_diagram({0, 2, 4, 5})) == BettiTable{{{0, 0}, 3}, {{1, 1}, 10}, {{2, 2}, 15}, {{3, 2}, 8}});
    CHECK(cleared_table(hk_diagram({0, 3, 4, 5})) == hk_diagram({0, 3, 4, 5}).table);
}

TEST_CASE("families")
{
    CHECK(family_deq(2, 2) == DegreeSequence{0, 3, 4});
    CHECK(family_deq(3, 1) == DegreeSequence{0, 2, 3, 4});
    CHECK(family_deq(1, 1) == DegreeSequence{0, 2});
    CHECK(family_tilde(3, 1) == DegreeSequence{0, 2, 3, 5});
    CHECK(family_tilde(3, 2) == DegreeSequence{0, 3, 4, 7});
    CHECK(family_tilde(2, 1) == DegreeSequence{0, 2, 4});
    CHECK_THROWS_AS(family_tilde(1, 1), Error);
    CHECK_THROWS_AS(family_deq(0, 1), Error);
}

TEST_CASE("binomial agrees with Pascal's triangle")
{
    for (int n = 0; n <= 30; ++n)
        for (int k = -1; k <= n + 1; ++k)
            CHECK(binomial(n, k) == pascal(n, k));
}

TEST_CASE("kappa_max")
{
    CHECK(kappa_max(1, 2, 2) == 4);
    CHECK(kappa_max(2, 2, 4) == 45);
    CHECK(kappa_max(3, 1, 3) == 3);
    CHECK(kappa_max(5, 1, 3) == 0);
    CHECK(hk_diagram({0, 3, 4}).table.at(1, 2) == Rational(kappa_max(1, 2, 2)));
    CHECK(hk_diagram({0, 3, 4, 5, 6}).table.at(2, 2) == Rational(kappa_max(2, 2, 4)));
    CHECK(hk_diagram({0, 2, 3, 4}).table.at(3, 1) == Rational(kappa_max(3, 1, 3)));
    CHECK_THROWS_AS(kappa_max(0, 1, 1), Error);
}

TEST_CASE("kappa_next_max")
{
    CHECK(kappa_next_max(1, 3) == 5);
    CHECK(kappa_next_max(2, 3) == 5);
    CHECK(kappa_next_max(1, 2) == 2);
    CHECK(kappa_next_max(3, 3) == 0);
    CHECK(hk_diagram({0, 2, 3, 5}).table.at(1, 1) == Rational(kappa_next_max(1, 3)));
    CHECK_THROWS_AS(kappa_next_max(1, 1), Error);
}

TEST_CASE("closed forms of d^{e,q} against Pascal's triangle")
{
    for (int e = 1; e <= 10; ++e)
        for (int q = 1; q <= 10; ++q) {
            auto pd = hk_diagram(family_deq(e, q));
            CHECK(pd.multiplicity == Rational(pascal(e + q, q)));
            for (int p = 1; p <= e; ++p)
                CHECK(pd.table.at(p, q) == Rational(pascal(p + q - 1, q) * pascal(e + q, p + q)));
        }
}

TEST_CASE("closed forms of d~^{e,1} against Pascal's triangle")
{
    for (int e = 2; e <= 10; ++e) {
        auto pd = hk_diagram(family_tilde(e, 1));
        CHECK(pd.multiplicity == e + 2);
        CHECK(pd.table.at(e, 2) == 1);
        for (int p = 1; p <= e - 1; ++p)
            CHECK(pd.table.at(p, 1) == Rational(Integer(p) * pascal(e + 1, p + 1) - pascal(e, p - 1)));
    }
}

TEST_CASE("cleared Hilbert numerators vanish to order l at t = 1")
{
    for (const DegreeSequence& d : {DegreeSequence{0, 2, 4, 5}, DegreeSequence{0, 3, 4, 5, 6}, DegreeSequence{1, 4, 9}})
        CHECK(hilbert_numerator(cleared_table(hk_diagram(d))).order_at_one() >= d.length());
}
