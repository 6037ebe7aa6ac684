#pragma once

#include "bettikit/bounds.hpp"
#include "bettikit/decompose.hpp"
#include "bettikit/koszul.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bettikit {

struct ExpectedCheck {
    std::string kind;  // "max" or "next-to-max"
    Assumptions assumptions;
    std::optional<int> q;  // defaults to the first nontrivial strand
    Verdict verdict = Verdict::NoneMax;
    std::optional<int> verdict_p;
    std::optional<Rational> degree_predicted;
    std::optional<bool> shape_holds;
};

// One corpus entry: an input table or ideal plus whatever outputs are pinned.
struct FixtureEntry {
    std::string name;
    std::string description;
    std::optional<std::string> table_path;
    std::optional<std::string> ideal_path;
    int q_max = 0;
    std::optional<BettiTable> expected_table;
    std::optional<Decomposition> expected_decomposition;
    std::optional<int> codim;
    std::optional<Rational> expected_multiplicity;
    std::vector<ExpectedCheck> checks;
};

struct FixtureResult {
    std::string name;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// $FIXTURES_DIR if set, otherwise the corpus bundled with the build.
std::string fixtures_dir();
std::vector<FixtureEntry> load_fixtures(const std::string& dir);

// The table a fixture describes: the table file, or the Koszul table of the
// ideal over the given field.
BettiTable fixture_table(const FixtureEntry& f, std::optional<FieldSpec> field = std::nullopt);

// Runs every pinned expectation; ideal fixtures are computed over both
// GF(32003) and Q and must agree.
FixtureResult run_fixture(const FixtureEntry& f);

}  // namespace bettikit
