#include "bettikit/rational.hpp"

#include "bettikit/errors.hpp"

#include <cctype>
#include <sstream>

namespace bettikit {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text)
{
    if (!is_integer_literal(text))
        throw ParseError("not an integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(den_text);
    if (den == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str(10);
    return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

IntPolynomial::IntPolynomial(std::initializer_list<std::pair<const int, Integer>> terms)
{
    for (const auto& [e, c] : terms)
        add_term(e, c);
}

void IntPolynomial::add_term(int exponent, const Integer& coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer IntPolynomial::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const
{
    IntPolynomial out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const
{
    IntPolynomial out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, -c);
    return out;
}

IntPolynomial IntPolynomial::divide_by_one_minus_t() const
{
    // f = (1 - t) g  <=>  g_k = sum_{j <= k} f_j, which terminates iff sum f_j = 0.
    IntPolynomial out;
    if (terms_.empty())
        return out;
    Integer running = 0;
    int lo = terms_.begin()->first;
    int hi = terms_.rbegin()->first;
    for (int k = lo; k <= hi; ++k) {
        running += coefficient(k);
        if (k == hi) {
            if (running != 0)
                throw Error("polynomial is not divisible by (1 - t)");
            break;
        }
        out.add_term(k, running);
    }
    return out;
}

int IntPolynomial::order_at_one() const
{
    if (is_zero())
        return -1;
    int order = 0;
    IntPolynomial f = *this;
    for (;;) {
        Integer sum = 0;
        for (const auto& [e, c] : f.terms_)
            sum += c;
        if (sum != 0)
            return order;
        f = f.divide_by_one_minus_t();
        ++order;
    }
}

std::string IntPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool show_coeff = mag != 1 || e == 0;
        if (show_coeff)
            out << mag.get_str();
        if (e != 0) {
            out << "t";
            if (e != 1)
                out << "^" << e;
        }
    }
    return out.str();
}

IntPolynomial one_minus_t_power(int k)
{
    IntPolynomial out{{0, Integer(1)}};
    IntPolynomial factor{{0, Integer(1)}, {1, Integer(-1)}};
    for (int i = 0; i < k; ++i)
        out = out * factor;
    return out;
}

NegativeEntry::NegativeEntry(int p_, int q_)
    : Error("negative entry at (p=" + std::to_string(p_) + ", q=" + std::to_string(q_) + ")"),
      p(p_),
      q(q_)
{
}

StrandNotIncreasing::StrandNotIncreasing(int p_)
    : Error("top strand is not strictly increasing at column " + std::to_string(p_)), p(p_)
{
}

NoColumn::NoColumn(int p_) : Error("column " + std::to_string(p_) + " is empty"), p(p_) {}

NotInCone::NotInCone(const std::string& reason)
    : Error("table is not in the Boij-Soderberg cone: " + reason)
{
}

IterationLimitExceeded::IterationLimitExceeded(std::size_t limit_)
    : Error("decomposition exceeded " + std::to_string(limit_) + " iterations"), limit(limit_)
{
}

namespace {
std::string located(const std::string& message, std::size_t line, std::size_t column)
{
    if (line == 0)
        return message;
    std::string loc = "line " + std::to_string(line);
    if (column != 0)
        loc += ", column " + std::to_string(column);
    return loc + ": " + message;
}
}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line_, std::size_t column_)
    : Error(located(message, line_, column_)), line(line_), column(column_), detail(message)
{
}

}  // namespace bettikit
