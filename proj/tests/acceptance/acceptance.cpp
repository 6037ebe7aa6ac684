// One line per acceptance criterion; exit status is nonzero if any fails.
#include "bettikit/bounds.hpp"
#include "bettikit/cli.hpp"
#include "bettikit/decompose.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/fixtures.hpp"
#include "bettikit/io.hpp"
#include "bettikit/koszul.hpp"
#include "bettikit/pure.hpp"
#include "bettikit/selftest.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace bettikit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

// Pascal's triangle, independent of the library's binomial.
Integer choose(int n, int k)
{
    static std::vector<std::vector<Integer>> rows{{1}};
    if (k < 0 || n < 0 || k > n)
        return 0;
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Integer> next(prev.size() + 1, 1);
        for (std::size_t i = 1; i < prev.size(); ++i)
            next[i] = prev[i - 1] + prev[i];
        rows.push_back(next);
    }
    return rows[n][k];
}

std::string fixture(const std::string& name) { return (std::filesystem::path(fixtures_dir()) / name).string(); }

using TermSet = std::set<std::pair<std::string, std::vector<int>>>;

// Runs `decompose --out json` and collects the terms as an unordered set.
TermSet decompose_via_cli(const std::string& file, int codim, std::string& multiplicity, Outcome& o)
{
    std::ostringstream out, err;
    int code = run_cli({"decompose", file, "--codim", std::to_string(codim), "--out", "json"}, out, err);
    if (code != kExitOk) {
        o.fail("decompose exited " + std::to_string(code) + ": " + err.str());
        return {};
    }
    auto j = nlohmann::json::parse(out.str());
    TermSet terms;
    for (const auto& t : j.at("terms"))
        terms.insert({t.at("coefficient").get<std::string>(), t.at("degrees").get<std::vector<int>>()});
    multiplicity = j.value("multiplicity", "");
    return terms;
}

Outcome criterion1()
{
    Outcome o;
    std::string mult;
    auto terms = decompose_via_cli(fixture("veronese_projection.table"), 2, mult, o);
    TermSet expected{{"2/3", {0, 3, 4}}, {"7/30", {0, 3, 4, 5}}, {"1/10", {0, 3, 4, 5, 6}}};
    if (o.ok && terms != expected)
        o.fail("terms differ");
    return o;
}

Outcome criterion2()
{
    Outcome o;
    std::string mult;
    auto terms = decompose_via_cli(fixture("cubic_conic.table"), 3, mult, o);
    TermSet expected{{"2/3", {0, 2, 3, 4}}, {"2/15", {0, 2, 3, 5}}, {"1/10", {0, 2, 4, 5}}, {"1/10", {0, 3, 4, 5}}};
    if (o.ok && terms != expected)
        o.fail("terms differ");
    if (o.ok && mult != "5")
        o.fail("multiplicity " + mult);
    return o;
}

Outcome criterion3()
{
    Outcome o;
    int cases = 0;
    for (int e = 1; e <= 10; ++e)
        for (int q = 1; q <= 10; ++q) {
            ++cases;
            std::vector<int> d{0};
            for (int k = 1; k <= e; ++k)
                d.push_back(q + k);
            auto pd = hk_diagram(DegreeSequence(d));
            for (int p = 1; p <= e; ++p)
                if (pd.table.at(p, q) != Rational(choose(p + q - 1, q) * choose(e + q, p + q)))
                    o.fail("e=" + std::to_string(e) + " q=" + std::to_string(q) + " p=" + std::to_string(p));
            if (pd.multiplicity != Rational(choose(e + q, q)))
                o.fail("multiplicity e=" + std::to_string(e) + " q=" + std::to_string(q));
        }
    o.detail = o.ok ? std::to_string(cases) + " cases" : o.detail;
    return o;
}

Outcome criterion4()
{
    Outcome o;
    for (int e = 2; e <= 10; ++e) {
        std::vector<int> d{0};
        for (int k = 1; k < e; ++k)
            d.push_back(k + 1);
        d.push_back(e + 2);
        auto pd = hk_diagram(DegreeSequence(d));
        const std::string tag = "e=" + std::to_string(e);
        for (int p = 1; p <= e - 1; ++p)
            if (pd.table.at(p, 1) != Rational(p * choose(e + 1, p + 1) - choose(e, p - 1)))
                o.fail(tag + " p=" + std::to_string(p));
        if (pd.table.at(e, 2) != 1)
            o.fail(tag + " entry (e,2)");
        if (pd.multiplicity != e + 2)
            o.fail(tag + " multiplicity");
    }
    return o;
}

void each_sequence(int e, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> d{0};
    std::function<void(int)> extend = [&](int next_min) {
        if (static_cast<int>(d.size()) == e + 1) {
            visit(d);
            return;
        }
        for (int v = next_min; v <= hi; ++v) {
            d.push_back(v);
            extend(v + 1);
            d.pop_back();
        }
    };
    extend(lo);
}

Outcome criterion5()
{
    Outcome o;
    int cases = 0;
    for (int e = 1; e <= 5; ++e)
        for (int q = 1; q <= 4; ++q)
            each_sequence(e, q + 1, q + e + 3, [&](const std::vector<int>& d) {
                ++cases;
                auto pd = hk_diagram(DegreeSequence(d));
                bool some = false, all = true;
                for (int p = 1; p <= e; ++p) {
                    Rational bound(choose(p + q - 1, q) * choose(e + q, p + q));
                    Rational observed = pd.table.at(p, q);
                    if (observed > bound)
                        o.fail("bound exceeded");
                    some = some || observed == bound;
                    all = all && observed == bound;
                }
                Rational min_mult(choose(e + q, q));
                if (pd.multiplicity < min_mult)
                    o.fail("multiplicity below bound");
                bool extremal = true;
                for (int k = 1; k <= e; ++k)
                    extremal = extremal && d[k] == q + k;
                if (some != extremal || all != extremal || (pd.multiplicity == min_mult) != extremal)
                    o.fail("equality condition mismatch at q=" + std::to_string(q));
            });
    if (o.ok)
        o.detail = std::to_string(cases) + " sequences";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    std::map<std::string, int> expected_codim{{"twisted_cubic", 2},           {"veronese_surface", 3},
                                              {"rational_normal_curve_2", 1}, {"rational_normal_curve_3", 2},
                                              {"rational_normal_curve_4", 3}, {"rational_normal_curve_5", 4}};
    std::size_t ideals = 0;
    for (const auto& f : load_fixtures(fixtures_dir())) {
        if (!f.ideal_path)
            continue;
        ++ideals;
        auto result = run_fixture(f);
        if (!result.passed())
            o.fail(f.name + ": " + result.failures.front());
        auto it = expected_codim.find(f.name);
        if (it == expected_codim.end())
            continue;
        auto ideal = parse_ideal(read_file(*f.ideal_path));
        auto pure = hk_diagram(family_deq(it->second, 1)).table;
        for (auto field : {FieldSpec::gf(32003), FieldSpec::rational()}) {
            ideal.field = field;
            auto bt = betti_table(ideal, f.q_max);
            if (bt.table != pure)
                o.fail(f.name + " over " + field.name() + " is not the maximal pure diagram");
            if (!bt.complete)
                o.fail(f.name + " incomplete");
            if (!hilbert_consistency(ideal, bt.table, f.q_max))
                o.fail(f.name + " hilbert consistency");
        }
        expected_codim.erase(it);
    }
    if (!expected_codim.empty())
        o.fail("missing fixture " + expected_codim.begin()->first);
    if (o.ok)
        o.detail = std::to_string(ideals) + " ideal fixtures, both fields";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    auto veronese = parse_table(read_file(fixture("veronese_projection.table")));
    auto r = check_first_strand(veronese, {true, false, 2}, 2);
    if (r.verdict != Verdict::Violation || r.per_p.empty())
        o.fail("first strand verdict " + to_string(r.verdict));
    for (const auto& c : r.per_p)
        if (!(c.observed > Rational(c.bound)))
            o.fail("p=" + std::to_string(c.p) + " not above bound");

    auto cubic_conic = parse_table(read_file(fixture("cubic_conic.table")));
    auto n = check_next_to_max(cubic_conic, {false, false, 3});
    if (n.verdict != Verdict::Violation || n.verdict_p != 2)
        o.fail("next-to-max verdict " + to_string(n.verdict));
    bool found = false;
    for (const auto& c : n.per_p)
        if (c.p == 2) {
            found = true;
            if (c.observed != 6 || c.bound != 5)
                o.fail("p=2 comparison");
        }
    if (!found)
        o.fail("p=2 missing");
    return o;
}

std::vector<int> random_sequence(std::mt19937_64& rng, int min_len)
{
    std::vector<int> d{0};
    int len = min_len + static_cast<int>(rng() % (6 - min_len));
    for (int k = 0; k < len; ++k)
        d.push_back(d.back() + 1 + static_cast<int>(rng() % 3));
    return d;
}

Outcome criterion8()
{
    Outcome o;
    std::mt19937_64 rng(20261019);

    // reconstruction identity on random chains
    for (int trial = 0; trial < 200; ++trial) {
        auto d = random_sequence(rng, 1);
        Decomposition truth;
        int terms = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < terms; ++i) {
            Rational c(static_cast<long>(1 + rng() % 50), static_cast<long>(1 + rng() % 30));
            c.canonicalize();
            truth.terms.push_back({c, DegreeSequence(d)});
            if (d.size() > 2 && rng() % 3 == 0) {
                d.pop_back();
            } else {
                auto k = 1 + rng() % (d.size() - 1);
                ++d[k];
                for (auto j = k + 1; j < d.size() && d[j] <= d[j - 1]; ++j)
                    d[j] = d[j - 1] + 1;
            }
        }
        auto t = truth.reconstruct();
        try {
            auto dec = bs_decompose(t);
            if (dec.reconstruct() != t || dec != truth || !chain_check(dec))
                o.fail("chain " + std::to_string(trial));
        } catch (const Error& e) {
            o.fail(std::string("chain raised: ") + e.what());
        }
    }

    // square-zero differential
    for (int trial = 0; trial < 50; ++trial) {
        auto ideal = random_ideal(rng, trial % 2 == 0 ? FieldSpec::gf(32003) : FieldSpec::rational());
        const int n = static_cast<int>(ideal.num_vars);
        for (int p = 2; p <= n + 1; ++p)
            for (int q = 0; q <= 3; ++q) {
                auto first = koszul_differential(ideal, p, q);
                auto second = koszul_differential(ideal, p - 1, q + 1);
                if (first.cols() == 0 || second.rows() == 0 || first.rows() == 0)
                    continue;
                if (!(second * first).is_zero())
                    o.fail("delta^2 != 0 on " + emit_ideal(ideal));
            }
    }

    // round trips
    for (int trial = 0; trial < 100; ++trial) {
        BettiTable t;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 8); ++i)
            t.set(static_cast<int>(rng() % 6), static_cast<int>(rng() % 6) - 1,
                  Rational(static_cast<long>(rng() % 40), static_cast<long>(1 + rng() % 30)));
        if (parse_table_text(emit_table_text(t)) != t || parse_table(emit_table_json(t)) != t)
            o.fail("table round trip");
        auto ideal = random_ideal(rng, trial % 2 == 0 ? FieldSpec::gf(32003) : FieldSpec::rational());
        if (parse_ideal(emit_ideal(ideal)) != ideal)
            o.fail("ideal round trip");
    }

    // off-cone tables: a pure diagram with one column perturbed
    for (int trial = 0; trial < 20; ++trial) {
        auto d = random_sequence(rng, 1);
        auto t = hk_diagram(DegreeSequence(d)).table;
        const int len = static_cast<int>(d.size()) - 1;
        Rational eps(1, static_cast<long>(2 + rng() % 29));
        if (trial % 2 == 0) {
            t.set(len, d[len] - len, t.at(len, d[len] - len) + eps);
        } else {
            int p = static_cast<int>(rng() % len);
            Rational v = t.at(p, d[p] - p);
            t.set(p, d[p] - p, v - eps * v);
        }
        try {
            bs_decompose(t);
            o.fail("accepted off-cone table from (" + DegreeSequence(d).to_string() + ")");
        } catch (const NotInCone&) {
        }
    }
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"decomposition of the projected Veronese table", criterion1},
        {"decomposition and multiplicity of the cubic-and-conic table", criterion2},
        {"maximal family closed forms, 1 <= e,q <= 10", criterion3},
        {"next-to-maximal family closed forms, 2 <= e <= 10", criterion4},
        {"exhaustive degree-sequence bound sweep", criterion5},
        {"Koszul engine on minimal-degree fixtures and field agreement", criterion6},
        {"negative controls", criterion7},
        {"property suite", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.detail.empty())
            std::cout << " (" << o.detail << ")";
        std::cout << "\n";
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
