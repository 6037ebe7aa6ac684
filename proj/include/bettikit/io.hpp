#pragma once

#include "bettikit/bounds.hpp"
#include "bettikit/decompose.hpp"
#include "bettikit/koszul.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace bettikit {

// Text tables: one line per nonzero row, "q: v0 v1 ...", "." for zero,
// trailing zeros trimmed. Blank lines and '#' comments are ignored on input.
BettiTable parse_table_text(std::string_view text);
std::string emit_table_text(const BettiTable& t);

// {"entries":[{"p":0,"q":0,"num":"1","den":"1"}, ...]} sorted by (p, q).
nlohmann::json table_to_json(const BettiTable& t);
BettiTable table_from_json(const nlohmann::json& j);
BettiTable parse_table_json(std::string_view text);
std::string emit_table_json(const BettiTable& t);

// JSON when the first non-space character is '{', text otherwise.
BettiTable parse_table(std::string_view text);

// Shifts rows so the smallest occupied row is 0.
BettiTable normalize_table(const BettiTable& t);

// "vars N", optional "field rational|gf P", then one polynomial per line.
Ideal parse_ideal(std::string_view text);
std::string emit_ideal(const Ideal& ideal);
Polynomial parse_polynomial(std::string_view text, std::size_t num_vars, std::size_t line = 1);
std::string emit_polynomial(const Polynomial& f);

nlohmann::json decomposition_to_json(const Decomposition& dec, const std::optional<Rational>& multiplicity);
Decomposition decomposition_from_json(const nlohmann::json& j);
// "x  d" per line in the given order.
std::string emit_decomposition_text(const Decomposition& dec);

nlohmann::json report_to_json(const StrandReport& r);
std::string emit_report_text(const StrandReport& r);

std::string read_file(const std::string& path);

}  // namespace bettikit
