#include "bettikit/io.hpp"

#include "bettikit/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bettikit {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string_view strip_comment(std::string_view line)
{
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

// Splits into lines, keeping 1-based numbering.
std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

BettiTable parse_table_text(std::string_view text)
{
    BettiTable t;
    std::map<int, std::size_t> seen_rows;
    const auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        std::string_view line = strip_comment(lines[ln]);
        if (trim(line).empty())
            continue;
        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected 'q: v0 v1 ...'", line_no, 1);
        std::string_view row_text = trim(line.substr(0, colon));
        int q = 0;
        try {
            Integer z = parse_integer(row_text);
            if (!z.fits_sint_p())
                throw ParseError("row index out of range");
            q = static_cast<int>(z.get_si());
        } catch (const ParseError&) {
            throw ParseError("bad row index '" + std::string(row_text) + "'", line_no, 1);
        }
        if (auto [it, inserted] = seen_rows.emplace(q, line_no); !inserted)
            throw ParseError("duplicate row " + std::to_string(q) + " (first given on line "
                                 + std::to_string(it->second) + ")",
                             line_no, 1);

        std::size_t pos = colon + 1;
        int p = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            if (pos >= line.size())
                break;
            std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            std::string_view token = line.substr(start, pos - start);
            const std::size_t column = start + 1;
            if (token != "." && token != "-") {
                Rational value;
                try {
                    value = parse_rational(token);
                } catch (const ParseError&) {
                    throw ParseError("bad entry '" + std::string(token) + "'", line_no, column);
                }
                if (value < 0)
                    throw ParseError("negative entry '" + std::string(token) + "' at (p=" + std::to_string(p)
                                         + ", q=" + std::to_string(q) + ")",
                                     line_no, column);
                t.set(p, q, value);
            }
            ++p;
        }
    }
    return t;
}

std::string emit_table_text(const BettiTable& t)
{
    std::map<int, std::map<int, Rational>> rows;
    for (const auto& [cell, value] : t.entries())
        rows[cell.q][cell.p] = value;
    std::string out;
    for (const auto& [q, cols] : rows) {
        out += std::to_string(q) + ":";
        int last = cols.rbegin()->first;
        for (int p = 0; p <= last; ++p) {
            auto it = cols.find(p);
            out += ' ';
            out += it == cols.end() ? "." : to_string(it->second);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json table_to_json(const BettiTable& t)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [cell, value] : t.entries())
        entries.push_back({{"p", cell.p}, {"q", cell.q}, {"num", value.get_num().get_str()},
                           {"den", value.get_den().get_str()}});
    return {{"entries", entries}};
}

BettiTable table_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw ParseError("betti table JSON needs an 'entries' array");
    BettiTable t;
    std::size_t index = 0;
    for (const auto& e : j["entries"]) {
        ++index;
        std::string where = "entry " + std::to_string(index);
        try {
            int p = e.at("p").get<int>();
            int q = e.at("q").get<int>();
            auto text_of = [](const nlohmann::json& v) {
                return v.is_string() ? v.get<std::string>() : v.dump();
            };
            Rational value = parse_rational(text_of(e.at("num")) + "/" + text_of(e.at("den")));
            if (p < 0)
                throw ParseError(where + ": negative column index");
            if (value < 0)
                throw ParseError(where + ": negative entry at (p=" + std::to_string(p) + ", q=" + std::to_string(q)
                                 + ")");
            if (t.contains(p, q))
                throw ParseError(where + ": duplicate cell (" + std::to_string(p) + "," + std::to_string(q) + ")");
            t.set(p, q, value);
        } catch (const nlohmann::json::exception& err) {
            throw ParseError(where + ": " + err.what());
        } catch (const ParseError& err) {
            throw ParseError(err.detail.starts_with("entry") ? err.detail : where + ": " + err.detail);
        }
    }
    return t;
}

BettiTable parse_table_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    return table_from_json(j);
}

std::string emit_table_json(const BettiTable& t) { return table_to_json(t).dump() + "\n"; }

BettiTable parse_table(std::string_view text)
{
    auto body = trim(text);
    if (!body.empty() && body.front() == '{')
        return parse_table_json(text);
    return parse_table_text(text);
}

BettiTable normalize_table(const BettiTable& t)
{
    auto lo = t.min_row();
    return lo ? t.shifted(-*lo) : t;
}

namespace {

// Recursive-descent polynomial reader over one line.
class PolynomialReader {
public:
    PolynomialReader(std::string_view text, std::size_t num_vars, std::size_t line)
        : text_(text), num_vars_(num_vars), line_(line)
    {
    }

    Polynomial read()
    {
        Polynomial f(num_vars_);
        skip_space();
        if (at_end())
            fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            read_term(f, sign);
            skip_space();
        }
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) const
    {
        std::string near = pos_ < text_.size() ? " near '" + std::string(text_.substr(pos_, 8)) + "'" : " at end of line";
        throw ParseError(message + near, line_, pos_ + 1);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::string_view digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void read_term(Polynomial& f, int sign)
    {
        Rational coefficient(sign);
        std::vector<unsigned> exponents(num_vars_, 0);
        bool have_factor = false;
        for (;;) {
            skip_space();
            if (at_end())
                fail("expected a coefficient or variable");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string number(digits());
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    auto den = digits();
                    if (den.empty())
                        fail("expected a denominator");
                    number += "/" + std::string(den);
                }
                coefficient *= parse_rational(number);
            } else if (peek() == 'x') {
                std::size_t start = pos_;
                ++pos_;
                auto index_text = digits();
                if (index_text.empty()) {
                    pos_ = start;
                    fail("variable needs an index, e.g. x0");
                }
                unsigned long index = std::stoul(std::string(index_text));
                if (index >= num_vars_) {
                    pos_ = start;
                    fail("unknown variable 'x" + std::string(index_text) + "' (have x0..x"
                         + std::to_string(num_vars_ - 1) + ")");
                }
                unsigned power = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_space();
                    auto power_text = digits();
                    if (power_text.empty())
                        fail("expected an exponent");
                    power = static_cast<unsigned>(std::stoul(std::string(power_text)));
                }
                exponents[index] += power;
            } else {
                fail("unexpected character '" + std::string(1, peek()) + "'");
            }
            have_factor = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            if (!at_end() && peek() == 'x')
                continue;
            break;
        }
        if (!have_factor)
            fail("empty term");
        f.add_term(Monomial(std::move(exponents)), coefficient);
    }

    std::string_view text_;
    std::size_t num_vars_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars, std::size_t line)
{
    return PolynomialReader(text, num_vars, line).read();
}

std::string emit_polynomial(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        bool unit = m.degree() == 0;
        if (mag != 1 || unit) {
            out += to_string(mag);
            if (!unit)
                out += "*";
        }
        if (!unit)
            out += m.to_string();
    }
    return out;
}

Ideal parse_ideal(std::string_view text)
{
    Ideal ideal;
    bool have_vars = false;
    bool have_field = false;
    const auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        std::string_view line = trim(strip_comment(lines[ln]));
        if (line.empty())
            continue;
        if (!have_vars) {
            if (!line.starts_with("vars"))
                throw ParseError("expected 'vars N' as the first line", line_no, 1);
            auto count_text = trim(line.substr(4));
            Integer n;
            try {
                n = parse_integer(count_text);
            } catch (const ParseError&) {
                throw ParseError("bad variable count '" + std::string(count_text) + "'", line_no, 6);
            }
            if (n < 1 || n > 64)
                throw ParseError("variable count must be between 1 and 64", line_no, 6);
            ideal.num_vars = n.get_ui();
            have_vars = true;
            continue;
        }
        if (line.starts_with("field")) {
            if (have_field || !ideal.generators.empty())
                throw ParseError("'field' must appear once, directly after 'vars'", line_no, 1);
            try {
                ideal.field = FieldSpec::parse(line.substr(5));
            } catch (const ParseError& err) {
                throw ParseError(err.detail, line_no, 7);
            }
            have_field = true;
            continue;
        }
        const std::size_t offset = static_cast<std::size_t>(line.data() - lines[ln].data());
        Polynomial f;
        try {
            f = parse_polynomial(line, ideal.num_vars, line_no);
        } catch (const ParseError& err) {
            throw ParseError(err.detail, line_no, err.column + offset);
        }
        if (f.is_zero())
            throw ParseError("generator '" + std::string(line) + "' is zero", line_no, offset + 1);
        if (!f.is_homogeneous())
            throw ParseError("generator '" + std::string(line) + "' is not homogeneous", line_no, offset + 1);
        if (f.degree() == 0)
            throw ParseError("generator '" + std::string(line) + "' is a constant", line_no, offset + 1);
        ideal.generators.push_back(std::move(f));
    }
    if (!have_vars)
        throw ParseError("missing 'vars N' line");
    if (!ideal.field.is_rational()) {
        PrimeField f(ideal.field.prime);
        for (std::size_t i = 0; i < ideal.generators.size(); ++i)
            for (const auto& [m, c] : ideal.generators[i].terms())
                if (c.get_den() % ideal.field.prime == 0)
                    throw ParseError("coefficient " + to_string(c) + " is undefined in " + ideal.field.name()
                                     + " (generator " + std::to_string(i + 1) + ")");
    }
    return ideal;
}

std::string emit_ideal(const Ideal& ideal)
{
    std::string out = "vars " + std::to_string(ideal.num_vars) + "\n";
    out += "field " + ideal.field.name() + "\n";
    for (const auto& g : ideal.generators)
        out += emit_polynomial(g) + "\n";
    return out;
}

nlohmann::json decomposition_to_json(const Decomposition& dec, const std::optional<Rational>& multiplicity)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : dec.terms) {
        std::vector<int> degrees(t.degrees.degrees().begin(), t.degrees.degrees().end());
        terms.push_back({{"coefficient", to_string(t.coefficient)}, {"degrees", degrees}});
    }
    nlohmann::json j{{"terms", terms}};
    if (multiplicity)
        j["multiplicity"] = to_string(*multiplicity);
    return j;
}

Decomposition decomposition_from_json(const nlohmann::json& j)
{
    Decomposition dec;
    try {
        for (const auto& t : j.at("terms"))
            dec.terms.push_back({parse_rational(t.at("coefficient").get<std::string>()),
                                 DegreeSequence(t.at("degrees").get<std::vector<int>>())});
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("bad decomposition JSON: ") + err.what());
    }
    return dec;
}

std::string emit_decomposition_text(const Decomposition& dec)
{
    std::string out;
    for (const auto& t : dec.terms)
        out += to_string(t.coefficient) + "  (" + t.degrees.to_string() + ")\n";
    return out;
}

nlohmann::json report_to_json(const StrandReport& r)
{
    nlohmann::json per_p = nlohmann::json::array();
    for (const auto& c : r.per_p)
        per_p.push_back({{"p", c.p}, {"observed", to_string(c.observed)}, {"bound", c.bound.get_str()},
                         {"attains_max", c.attains_max}});
    nlohmann::json j{
        {"kind", r.kind},
        {"q_strand", r.q_strand},
        {"assumptions", {{"nd_q", r.assumptions.nd_q}, {"lgp", r.assumptions.lgp}, {"codim_e", r.assumptions.codim_e}}},
        {"per_p", per_p},
        {"verdict", to_string(r.verdict)},
        {"notes", r.notes},
    };
    j["verdict_p"] = r.verdict_p ? nlohmann::json(*r.verdict_p) : nlohmann::json(nullptr);
    j["degree_predicted"] = r.degree_predicted ? nlohmann::json(to_string(*r.degree_predicted)) : nlohmann::json(nullptr);
    j["degree_observed"] = r.degree_observed ? nlohmann::json(to_string(*r.degree_observed)) : nlohmann::json(nullptr);
    j["shape_holds"] = r.shape_holds ? nlohmann::json(*r.shape_holds) : nlohmann::json(nullptr);
    return j;
}

std::string emit_report_text(const StrandReport& r)
{
    std::ostringstream out;
    out << (r.kind == "max" ? "maximal" : "next-to-maximal") << " bounds on strand q=" << r.q_strand
        << ", codimension e=" << r.assumptions.codim_e << "\n";
    out << "assumed: ND(q)=" << (r.assumptions.nd_q ? "yes" : "no")
        << ", linearly general position=" << (r.assumptions.lgp ? "yes" : "no") << "\n";
    for (const auto& c : r.per_p) {
        const char* mark = c.observed > Rational(c.bound) ? "  EXCEEDS" : (c.attains_max ? "  attains" : "");
        out << "  p=" << c.p << "  observed " << to_string(c.observed) << "  bound " << c.bound.get_str() << mark
            << "\n";
    }
    out << "verdict: " << to_string(r.verdict);
    if (r.verdict_p)
        out << "(" << *r.verdict_p << ")";
    out << "\n";
    if (r.degree_predicted)
        out << "degree predicted: " << to_string(*r.degree_predicted) << "\n";
    if (r.degree_observed)
        out << "degree from decomposition: " << to_string(*r.degree_observed) << "\n";
    if (r.shape_holds)
        out << "resolution shape: " << (*r.shape_holds ? "holds" : "does not hold") << "\n";
    for (const auto& n : r.notes)
        out << "note: " << n << "\n";
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace bettikit
