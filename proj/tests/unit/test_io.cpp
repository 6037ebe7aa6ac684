#include "bettikit/errors.hpp"
#include "bettikit/io.hpp"
#include "bettikit/selftest.hpp"

#include <doctest.h>

#include <random>

using namespace bettikit;

namespace {

BettiTable random_table(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(0, 40), den(1, 30), cell(0, 5);
    BettiTable t;
    int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i)
        t.set(cell(rng), cell(rng) - 1, Rational(num(rng), den(rng)));
    return t;
}

template <typename F>
ParseError parse_error(F&& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return ParseError("");
}

}  // namespace

TEST_CASE("text tables")
{
    BettiTable expected{{{0, 0}, 1}, {{1, 2}, 7}, {{2, 2}, 10}, {{3, 2}, 5}, {{4, 2}, 1}};
    CHECK(parse_table_text("0: 1\n2: . 7 10 5 1") == expected);
    CHECK(parse_table_text("# comment\n0: 1\n\n2: - 7 10 5 1   # trailing\n") == expected);
    CHECK(emit_table_text(expected) == "0: 1\n2: . 7 10 5 1\n");
    CHECK(parse_table_text("1: . 2/3 4") == BettiTable{{{1, 1}, Rational(2, 3)}, {{2, 1}, 4}});
    CHECK(parse_table_text("-1: 3") == BettiTable{{{0, -1}, 3}});
}

TEST_CASE("text table errors carry positions")
{
    auto e = parse_error([] { parse_table_text("0: 1\n1: . -3"); });
    CHECK(e.line == 2);
    CHECK(e.column == 6);
    CHECK(parse_error([] { parse_table_text("0: 1\n0: 2"); }).line == 2);
    CHECK(parse_error([] { parse_table_text("0 1"); }).line == 1);
    CHECK(parse_error([] { parse_table_text("0: 1/0"); }).line == 1);
    CHECK(parse_error([] { parse_table_text("0: x"); }).column == 4);
}

TEST_CASE("JSON tables")
{
    BettiTable t{{{0, 0}, 1}, {{2, 1}, Rational(10, 3)}};
    auto j = table_to_json(t);
    CHECK(j["entries"].size() == 2);
    CHECK(j["entries"][1]["num"] == "10");
    CHECK(j["entries"][1]["den"] == "3");
    CHECK(parse_table(emit_table_json(t)) == t);
    CHECK_THROWS_AS(parse_table_json(R"({"entries":[{"p":0,"q":0,"num":"-1","den":"1"}]})"), Error);
    CHECK_THROWS_AS(parse_table_json("{"), Error);
}

TEST_CASE("normalization shifts the minimal row to zero")
{
    BettiTable t{{{0, 2}, 1}, {{1, 3}, 4}};
    CHECK(normalize_table(t) == BettiTable{{{0, 0}, 1}, {{1, 1}, 4}});
}

TEST_CASE("table round trips")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto t = random_table(rng);
        CHECK(parse_table_text(emit_table_text(t)) == t);
        CHECK(parse_table(emit_table_json(t)) == t);
    }
}

TEST_CASE("ideal files")
{
    auto i = parse_ideal("# twisted cubic\nvars 4\nfield gf 101\nx0*x2 - x1^2\n2/3*x0*x3 - x1*x2\n");
    CHECK(i.num_vars == 4);
    CHECK(i.field == FieldSpec::gf(101));
    REQUIRE(i.generators.size() == 2);
    CHECK(emit_polynomial(i.generators[1]) == "2/3*x0*x3 - x1*x2");
    CHECK(parse_ideal("vars 2\nx0\n").field == FieldSpec::gf(32003));

    CHECK(parse_error([] { parse_ideal("vars 2\nx0 + x1^2"); }).line == 2);
    auto unknown = parse_error([] { parse_ideal("vars 2\nx0*x5"); });
    CHECK(unknown.line == 2);
    CHECK(unknown.column == 4);
    CHECK(parse_error([] { parse_ideal("vars 2\nx0 - x0"); }).line == 2);
    CHECK(parse_error([] { parse_ideal("vars 2\n3"); }).line == 2);
    CHECK(parse_error([] { parse_ideal("x0"); }).line == 1);
}

TEST_CASE("ideal round trips")
{
    std::mt19937_64 rng(23);
    for (int k = 0; k < 100; ++k) {
        auto i = random_ideal(rng, k % 2 == 0 ? FieldSpec::rational() : FieldSpec::gf(32003));
        CHECK(parse_ideal(emit_ideal(i)) == i);
    }
}

TEST_CASE("decomposition JSON and text")
{
    Decomposition d{{{Rational(2, 3), {0, 3, 4}}, {Rational(1, 10), {0, 3, 4, 5, 6}}}};
    auto j = decomposition_to_json(d, Rational(4));
    CHECK(decomposition_from_json(j) == d);
    CHECK(j["multiplicity"] == "4");
    auto text = emit_decomposition_text(d);
    CHECK(text.find("2/3  (0,3,4)") != std::string::npos);
}
