#include "bettikit/errors.hpp"
#include "bettikit/table.hpp"

#include <doctest.h>

#include <random>

using namespace bettikit;

namespace {

BettiTable example_221() { return {{{0, 0}, 1}, {{1, 2}, 7}, {{2, 2}, 10}, {{3, 2}, 5}, {{4, 2}, 1}}; }

BettiTable random_table(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> cell(0, 4);
    std::uniform_int_distribution<int> num(0, 12);
    std::uniform_int_distribution<int> den(1, 6);
    BettiTable t;
    for (int i = 0; i < 6; ++i)
        t.set(cell(rng), cell(rng), Rational(num(rng), den(rng)));
    return t;
}

}  // namespace

TEST_CASE("rationals are parsed into lowest terms")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("degree sequences must be strictly increasing")
{
    CHECK(DegreeSequence({0, 3, 4, 5}).length() == 3);
    CHECK(DegreeSequence({0}).length() == 0);
    CHECK_THROWS_AS(DegreeSequence({0, 3, 3}), Error);
    CHECK_THROWS_AS(DegreeSequence({0, 4, 3}), Error);
    CHECK(DegreeSequence::parse("0,3,4,5") == DegreeSequence{0, 3, 4, 5});
    CHECK(DegreeSequence::parse("-1, 2") == DegreeSequence{-1, 2});
    CHECK_THROWS_AS(DegreeSequence::parse("0,,2"), ParseError);
    CHECK_THROWS_AS(DegreeSequence::parse("0,2,1"), ParseError);
    CHECK(DegreeSequence{0, 3, 4, 5}.to_string() == "0,3,4,5");
}

TEST_CASE("tables drop zero cells and reject negative ones")
{
    BettiTable t;
    t.set(1, 2, 7);
    t.set(1, 2, 0);
    CHECK(t.empty());
    CHECK_THROWS_AS(t.set(0, 0, -1), NegativeEntry);

    auto ex = example_221();
    CHECK(ex.projective_dimension() == 4);
    CHECK(ex.regularity() == 2);
    CHECK(ex.column_min_row(2) == 2);
    CHECK_FALSE(ex.column_min_row(5).has_value());
    CHECK(BettiTable{}.projective_dimension() == -1);
}

TEST_CASE("add")
{
    CHECK(add({}, {}) == BettiTable{});
    CHECK(add({{{0, 0}, 1}}, {{{0, 0}, 1}}) == BettiTable{{{0, 0}, 2}});
    CHECK(add({{{1, 2}, 7}}, {{{2, 2}, 10}}) == BettiTable{{{1, 2}, 7}, {{2, 2}, 10}});
}

TEST_CASE("scale")
{
    CHECK(scale({{{1, 2}, 4}, {{2, 2}, 3}}, Rational(2, 3)) == BettiTable{{{1, 2}, Rational(8, 3)}, {{2, 2}, 2}});
    CHECK(scale(example_221(), 0).empty());
    CHECK(scale({{{0, 0}, 1}}, Rational(7, 30)) == BettiTable{{{0, 0}, Rational(7, 30)}});
    CHECK_THROWS_AS(scale(example_221(), -1), Error);
}

TEST_CASE("subtract_checked")
{
    CHECK(subtract_checked({{{1, 2}, 7}}, {{{1, 2}, 7}}).empty());
    CHECK(subtract_checked({{{1, 2}, 7}}, {{{1, 2}, 2}}) == BettiTable{{{1, 2}, 5}});
    try {
        subtract_checked({{{1, 2}, 1}}, {{{1, 2}, 2}});
        FAIL("expected NegativeEntry");
    } catch (const NegativeEntry& e) {
        CHECK(e.p == 1);
        CHECK(e.q == 2);
    }
}

TEST_CASE("hilbert_numerator")
{
    CHECK(hilbert_numerator({{{0, 0}, 1}}) == IntPolynomial{{0, Integer(1)}});
    // 1 - 3t^2 + 2t^3
    CHECK(hilbert_numerator({{{0, 0}, 1}, {{1, 1}, 3}, {{2, 1}, 2}})
          == IntPolynomial{{0, Integer(1)}, {2, Integer(-3)}, {3, Integer(2)}});
    // 1 - 7t^3 + 10t^4 - 5t^5 + t^6
    CHECK(hilbert_numerator(example_221())
          == IntPolynomial{{0, Integer(1)}, {3, Integer(-7)}, {4, Integer(10)}, {5, Integer(-5)}, {6, Integer(1)}});
    CHECK_THROWS_AS(hilbert_numerator({{{0, 0}, Rational(1, 2)}}), Error);
}

TEST_CASE("divisibility by powers of (1 - t)")
{
    CHECK(one_minus_t_power(3).order_at_one() == 3);
    CHECK((one_minus_t_power(2) * IntPolynomial{{0, Integer(1)}, {1, Integer(1)}}).order_at_one() == 2);
    CHECK(IntPolynomial{{0, Integer(1)}}.order_at_one() == 0);
    CHECK(IntPolynomial{}.order_at_one() == -1);
    CHECK(one_minus_t_power(2).to_string() == "1 - 2t + t^2");
}

TEST_CASE("linear identities hold exactly on random tables")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BettiTable a = random_table(rng);
        BettiTable b = random_table(rng);
        Rational c(static_cast<long>(rng() % 9), static_cast<long>(rng() % 7 + 1));
        Rational d(static_cast<long>(rng() % 9), static_cast<long>(rng() % 7 + 1));
        c.canonicalize();
        d.canonicalize();
        CHECK(scale(add(a, b), c) == add(scale(a, c), scale(b, c)));
        CHECK(scale(scale(a, c), d) == scale(a, c * d));
        CHECK(subtract_checked(add(a, b), b) == a);
    }
}
