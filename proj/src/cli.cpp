#include "bettikit/cli.hpp"

#include "bettikit/bounds.hpp"
#include "bettikit/decompose.hpp"
#include "bettikit/errors.hpp"
#include "bettikit/fixtures.hpp"
#include "bettikit/io.hpp"
#include "bettikit/koszul.hpp"
#include "bettikit/pure.hpp"
#include "bettikit/selftest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>

namespace bettikit {

namespace {

const char* kUsage =
    "usage: bettikit <command> [options]\n"
    "\n"
    "commands:\n"
    "  pure D [--clear-denominators] [--out json|text]\n"
    "      normalized pure diagram of the degree sequence D (e.g. 0,3,4,5)\n"
    "  decompose FILE [--format json|text] [--codim E] [--sorted]\n"
    "      Boij-Soderberg decomposition of a betti table\n"
    "  betti FILE --qmax Q [--field rational|gf P] [--out json|text] [--cross-check] [--threads N]\n"
    "      betti table of S/I from an ideal file, via Koszul cohomology\n"
    "  check FILE --codim E [--q Q] [--assert-nd] [--assert-lgp] [--next-to-max] [--ndm D,M] [--out json|text]\n"
    "      compare a betti table against the strand bounds (exit 2 on violation)\n"
    "  fixtures [--list] [--dir DIR]\n"
    "      run the bundled fixture corpus\n"
    "  selftest\n"
    "      exhaustive small-range invariant sweeps\n";

struct Options {
    std::string positional;
    std::string out_format = "text";
    bool clear = false;
    int codim = 0;
    bool sorted = false;
    int qmax = 0;
    std::string field;
    bool cross_check = false;
    unsigned threads = 0;
    int strand = 0;
    bool assert_nd = false;
    bool assert_lgp = false;
    bool next_to_max = false;
    std::string ndm;
    bool list = false;
    std::string dir;
};

int cmd_pure(const Options& o, std::ostream& out)
{
    DegreeSequence d = DegreeSequence::parse(o.positional);
    PureDiagram pd = hk_diagram(d);
    BettiTable shown = o.clear ? cleared_table(pd) : pd.table;
    if (o.out_format == "json") {
        nlohmann::json j{{"degrees", std::vector<int>(d.degrees().begin(), d.degrees().end())},
                         {"table", table_to_json(shown)},
                         {"multiplicity", to_string(pd.multiplicity)},
                         {"cleared", o.clear}};
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << emit_table_text(shown);
    out << "multiplicity: " << to_string(pd.multiplicity) << "\n";
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err)
{
    BettiTable t = normalize_table(parse_table(read_file(o.positional)));
    Decomposition dec = bs_decompose(t);
    if (o.sorted)
        dec = dec.sorted_for_display();
    std::optional<Rational> multiplicity;
    if (o.codim > 0) {
        multiplicity = multiplicity_from_decomposition(dec, o.codim);
        for (const auto& term : dec.terms)
            if (term.degrees.length() < o.codim)
                err << "warning: term (" << term.degrees.to_string() << ") is shorter than the asserted codimension "
                    << o.codim << "\n";
    }
    if (o.out_format == "json") {
        out << decomposition_to_json(dec, multiplicity).dump() << "\n";
        return kExitOk;
    }
    out << emit_decomposition_text(dec);
    if (multiplicity)
        out << "multiplicity (length " << o.codim << " part): " << to_string(*multiplicity) << "\n";
    return kExitOk;
}

int cmd_betti(const Options& o, std::ostream& out, std::ostream& err)
{
    Ideal ideal = parse_ideal(read_file(o.positional));
    if (!o.field.empty())
        ideal.field = FieldSpec::parse(o.field);
    BettiComputation result = KoszulComplex(ideal).betti_table(o.qmax, o.threads);

    std::optional<bool> agrees;
    FieldSpec other = ideal.field.is_rational() ? FieldSpec::gf(32003) : FieldSpec::rational();
    if (o.cross_check) {
        Ideal alt = ideal;
        alt.field = other;
        agrees = KoszulComplex(alt).betti_table(o.qmax, o.threads).table == result.table;
        if (!*agrees)
            err << "warning: betti numbers over " << other.name() << " differ from " << ideal.field.name() << "\n";
    }

    if (o.out_format == "json") {
        nlohmann::json j{{"table", table_to_json(result.table)},
                         {"field", result.field.name()},
                         {"q_max", result.q_max},
                         {"complete", result.complete}};
        if (agrees)
            j["cross_check"] = {{"field", other.name()}, {"agrees", *agrees}};
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << emit_table_text(result.table);
    out << "field: " << result.field.name() << "\n";
    out << "complete: " << (result.complete ? "yes" : "no") << " (rows " << o.qmax - 1 << " and " << o.qmax
        << (result.complete ? " are empty)" : " not both empty; raise --qmax)") << "\n";
    if (agrees)
        out << "cross-check over " << other.name() << ": " << (*agrees ? "agrees" : "DIFFERS") << "\n";
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out)
{
    BettiTable t = normalize_table(parse_table(read_file(o.positional)));
    Assumptions a{o.assert_nd, o.assert_lgp, o.codim};

    StrandReport report;
    if (o.next_to_max) {
        report = check_next_to_max(t, a);
    } else {
        int q = o.strand;
        if (q == 0) {
            auto strand = first_nontrivial_strand(t);
            if (!strand)
                throw Error("table has no first nontrivial strand (column 1 is empty)");
            q = *strand;
        }
        report = check_first_strand(t, a, q);
    }

    std::optional<bool> ndm;
    int ndm_d = 0;
    int ndm_m = 0;
    if (!o.ndm.empty()) {
        auto comma = o.ndm.find(',');
        if (comma == std::string::npos)
            throw ParseError("--ndm expects D,M");
        ndm_d = static_cast<int>(parse_integer(o.ndm.substr(0, comma)).get_si());
        ndm_m = static_cast<int>(parse_integer(o.ndm.substr(comma + 1)).get_si());
        ndm = check_Ndm(t, ndm_d, ndm_m);
    }

    if (o.out_format == "json") {
        nlohmann::json j = report_to_json(report);
        j["suggested_codim"] = {{"value", suggested_codimension(t)}, {"status", "suggested, unverified"}};
        if (!o.next_to_max) {
            auto b = degree_bounds(o.codim, report.q_strand);
            j["degree_bounds"] = {{"lower", b.lower.get_str()},
                                  {"lower_hypothesis", b.lower_hypothesis},
                                  {"upper", b.upper.get_str()},
                                  {"upper_hypothesis", b.upper_hypothesis}};
        }
        if (ndm)
            j["ndm"] = {{"d", ndm_d}, {"m", ndm_m}, {"holds", *ndm}};
        out << j.dump() << "\n";
    } else {
        out << emit_report_text(report);
        out << "suggested codimension (ACM, unverified): " << suggested_codimension(t) << "\n";
        if (!o.next_to_max) {
            auto b = degree_bounds(o.codim, report.q_strand);
            out << "degree bounds: deg >= " << b.lower.get_str() << " under " << b.lower_hypothesis
                << "; deg <= " << b.upper.get_str() << " under " << b.upper_hypothesis << "\n";
        }
        if (ndm)
            out << "N_{" << ndm_d << "," << ndm_m << "}: " << (*ndm ? "holds" : "fails") << "\n";
    }
    return report.verdict == Verdict::Violation ? kExitViolation : kExitOk;
}

int cmd_fixtures(const Options& o, std::ostream& out)
{
    auto entries = load_fixtures(o.dir.empty() ? fixtures_dir() : o.dir);
    if (o.list) {
        for (const auto& f : entries)
            out << f.name << (f.description.empty() ? "" : "  " + f.description) << "\n";
        return kExitOk;
    }
    std::size_t failed = 0;
    for (const auto& f : entries) {
        auto r = run_fixture(f);
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
        for (const auto& msg : r.failures)
            out << "  " << msg << "\n";
        failed += r.passed() ? 0 : 1;
    }
    out << entries.size() - failed << "/" << entries.size() << " fixtures passed\n";
    return failed ? kExitInputError : kExitOk;
}

int cmd_selftest(std::ostream& out)
{
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& r : run_selftest()) {
        out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
        for (std::size_t i = 0; i < r.counterexamples.size() && i < 10; ++i)
            out << "  counterexample: " << r.counterexamples[i] << "\n";
        ok = ok && r.ok();
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "selftest " << (ok ? "passed" : "FAILED") << " in " << elapsed << "s\n";
    return ok ? kExitOk : kExitInputError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    static const std::vector<std::string> commands{"pure", "decompose", "betti", "check", "fixtures", "selftest"};
    if (args.empty() || std::find(commands.begin(), commands.end(), args[0]) == commands.end()) {
        if (!args.empty() && (args[0] == "-h" || args[0] == "--help")) {
            out << kUsage;
            return kExitOk;
        }
        if (!args.empty())
            err << "unknown command '" << args[0] << "'\n";
        err << kUsage;
        return kExitUsage;
    }

    const std::string& command = args[0];
    Options o;
    CLI::App app{"bettikit " + command};
    auto out_choice = CLI::IsMember({"json", "text"});

    if (command == "pure") {
        app.add_option("degrees", o.positional, "degree sequence, e.g. 0,3,4,5")->required();
        app.add_flag("--clear-denominators", o.clear, "scale by the lcm of the denominators");
        app.add_option("--out", o.out_format)->check(out_choice);
    } else if (command == "decompose") {
        app.add_option("table", o.positional, "betti table file (text or JSON)")->required();
        app.add_option("--format,--out", o.out_format)->check(out_choice);
        app.add_option("--codim", o.codim, "length whose terms carry the multiplicity")->check(CLI::PositiveNumber);
        app.add_flag("--sorted", o.sorted, "order terms by length, then degrees");
    } else if (command == "betti") {
        app.add_option("ideal", o.positional, "ideal file")->required();
        app.add_option("--qmax", o.qmax, "largest row to compute")->required()->check(CLI::PositiveNumber);
        app.add_option("--field", o.field, "rational | gf P (overrides the file)");
        app.add_option("--out", o.out_format)->check(out_choice);
        app.add_flag("--cross-check", o.cross_check, "recompute over the other field and compare");
        app.add_option("--threads", o.threads, "worker threads (0 = hardware)");
    } else if (command == "check") {
        app.add_option("table", o.positional, "betti table file (text or JSON)")->required();
        app.add_option("--codim", o.codim, "asserted codimension e")->required()->check(CLI::PositiveNumber);
        app.add_option("--q", o.strand, "strand to check (default: first nontrivial)")->check(CLI::PositiveNumber);
        app.add_flag("--assert-nd", o.assert_nd, "assert property ND(q)");
        app.add_flag("--assert-lgp", o.assert_lgp, "assert linearly general position");
        app.add_flag("--next-to-max", o.next_to_max, "check the next-to-maximal linear-strand bounds");
        app.add_option("--ndm", o.ndm, "also test property N_{D,M}");
        app.add_option("--out", o.out_format)->check(out_choice);
    } else if (command == "fixtures") {
        app.add_flag("--list", o.list, "list fixtures without running them");
        app.add_option("--dir", o.dir, "corpus directory (default: $FIXTURES_DIR or bundled)");
    }

    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "bettikit " << command << ": " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (command == "pure")
            return cmd_pure(o, out);
        if (command == "decompose")
            return cmd_decompose(o, out, err);
        if (command == "betti")
            return cmd_betti(o, out, err);
        if (command == "check")
            return cmd_check(o, out);
        if (command == "fixtures")
            return cmd_fixtures(o, out);
        return cmd_selftest(out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace bettikit
