#include "bettikit/fixtures.hpp"

#include "bettikit/errors.hpp"
#include "bettikit/io.hpp"

#include <cstdlib>
#include <filesystem>

namespace bettikit {

namespace fs = std::filesystem;

std::string fixtures_dir()
{
    if (const char* env = std::getenv("FIXTURES_DIR"); env && *env)
        return env;
    return BETTIKIT_FIXTURES_DIR;
}

namespace {

Verdict parse_verdict(const std::string& s)
{
    for (Verdict v : {Verdict::AllMax, Verdict::NoneMax, Verdict::Violation, Verdict::MixedMaxInconsistent})
        if (to_string(v) == s)
            return v;
    throw ParseError("unknown verdict '" + s + "'");
}

}  // namespace

std::vector<FixtureEntry> load_fixtures(const std::string& dir)
{
    const fs::path base(dir);
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(read_file((base / "manifest.json").string()));
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("manifest.json: ") + err.what());
    }

    std::vector<FixtureEntry> out;
    for (const auto& j : manifest.at("fixtures")) {
        FixtureEntry f;
        f.name = j.at("name").get<std::string>();
        f.description = j.value("description", "");
        if (j.contains("table"))
            f.table_path = (base / j["table"].get<std::string>()).string();
        if (j.contains("ideal")) {
            f.ideal_path = (base / j["ideal"].get<std::string>()).string();
            f.q_max = j.at("qmax").get<int>();
        }
        if (!f.table_path == !f.ideal_path)
            throw ParseError("fixture '" + f.name + "' needs exactly one of 'table' or 'ideal'");
        if (j.contains("expected_table"))
            f.expected_table = parse_table(read_file((base / j["expected_table"].get<std::string>()).string()));
        if (j.contains("decomposition"))
            f.expected_decomposition = decomposition_from_json(j["decomposition"]);
        if (j.contains("codim"))
            f.codim = j["codim"].get<int>();
        if (j.contains("multiplicity"))
            f.expected_multiplicity = parse_rational(j["multiplicity"].get<std::string>());
        for (const auto& c : j.value("checks", nlohmann::json::array())) {
            ExpectedCheck ec;
            ec.kind = c.value("kind", "max");
            ec.assumptions.codim_e = c.at("codim").get<int>();
            ec.assumptions.nd_q = c.value("nd_q", false);
            ec.assumptions.lgp = c.value("lgp", false);
            if (c.contains("q"))
                ec.q = c["q"].get<int>();
            ec.verdict = parse_verdict(c.at("verdict").get<std::string>());
            if (c.contains("p"))
                ec.verdict_p = c["p"].get<int>();
            if (c.contains("degree_predicted"))
                ec.degree_predicted = parse_rational(c["degree_predicted"].get<std::string>());
            if (c.contains("shape_holds"))
                ec.shape_holds = c["shape_holds"].get<bool>();
            f.checks.push_back(std::move(ec));
        }
        out.push_back(std::move(f));
    }
    return out;
}

BettiTable fixture_table(const FixtureEntry& f, std::optional<FieldSpec> field)
{
    if (f.table_path)
        return normalize_table(parse_table(read_file(*f.table_path)));
    Ideal ideal = parse_ideal(read_file(*f.ideal_path));
    if (field)
        ideal.field = *field;
    return betti_table(ideal, f.q_max).table;
}

FixtureResult run_fixture(const FixtureEntry& f)
{
    FixtureResult r{f.name, {}};
    auto fail = [&](const std::string& msg) { r.failures.push_back(msg); };

    try {
        BettiTable table;
        if (f.table_path) {
            table = fixture_table(f);
        } else {
            Ideal ideal = parse_ideal(read_file(*f.ideal_path));
            Ideal over_q = ideal;
            over_q.field = FieldSpec::rational();
            Ideal over_p = ideal;
            over_p.field = FieldSpec::gf(32003);
            auto rational = betti_table(over_q, f.q_max);
            auto modular = betti_table(over_p, f.q_max);
            if (!(rational.table == modular.table))
                fail("GF(32003) and Q disagree:\n" + emit_table_text(modular.table) + "vs\n"
                     + emit_table_text(rational.table));
            if (!rational.complete)
                fail("table not flagged complete at qmax=" + std::to_string(f.q_max));
            if (!hilbert_consistency(over_q, rational.table, f.q_max))
                fail("hilbert consistency fails");
            table = rational.table;
        }

        if (f.expected_table && !(table == *f.expected_table))
            fail("table mismatch: got\n" + emit_table_text(table) + "expected\n" + emit_table_text(*f.expected_table));

        if (f.expected_decomposition || f.expected_multiplicity) {
            Decomposition dec = bs_decompose(table);
            if (!(dec.reconstruct() == table))
                fail("decomposition does not reconstruct the table");
            if (!chain_check(dec))
                fail("decomposition is not a chain");
            if (f.expected_decomposition && !(dec == *f.expected_decomposition))
                fail("decomposition mismatch: got\n" + emit_decomposition_text(dec));
            if (f.expected_multiplicity && f.codim) {
                Rational m = multiplicity_from_decomposition(dec, *f.codim);
                if (m != *f.expected_multiplicity)
                    fail("multiplicity " + to_string(m) + " != " + to_string(*f.expected_multiplicity));
            }
        }

        for (const auto& c : f.checks) {
            StrandReport rep;
            if (c.kind == "next-to-max") {
                rep = check_next_to_max(table, c.assumptions);
            } else {
                int q = c.q ? *c.q : first_nontrivial_strand(table).value_or(1);
                rep = check_first_strand(table, c.assumptions, q);
            }
            std::string label = c.kind + " check (e=" + std::to_string(c.assumptions.codim_e) + ")";
            if (rep.verdict != c.verdict || rep.verdict_p != c.verdict_p)
                fail(label + ": verdict " + to_string(rep.verdict)
                     + (rep.verdict_p ? "(" + std::to_string(*rep.verdict_p) + ")" : "") + ", expected "
                     + to_string(c.verdict) + (c.verdict_p ? "(" + std::to_string(*c.verdict_p) + ")" : ""));
            if (c.degree_predicted && rep.degree_predicted != c.degree_predicted)
                fail(label + ": predicted degree mismatch");
            if (c.shape_holds && rep.shape_holds != c.shape_holds)
                fail(label + ": resolution shape mismatch");
        }
    } catch (const std::exception& err) {
        fail(std::string("error: ") + err.what());
    }
    return r;
}

}  // namespace bettikit
