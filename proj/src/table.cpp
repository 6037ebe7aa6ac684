#include "bettikit/table.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace bettikit {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees))
{
    if (degrees_.empty())
        throw Error("degree sequence must contain at least one degree");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
        if (degrees_[i] <= degrees_[i - 1])
            throw Error("degree sequence " + to_string() + " is not strictly increasing at position "
                        + std::to_string(i));
}

DegreeSequence::DegreeSequence(std::initializer_list<int> degrees)
    : DegreeSequence(std::vector<int>(degrees))
{
}

std::string DegreeSequence::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(degrees_[i]);
    }
    return out;
}

DegreeSequence DegreeSequence::parse(std::string_view text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        int value = 0;
        const char* begin = token.data();
        const char* end = token.data() + token.size();
        if (!token.empty() && *begin == '+')
            ++begin;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (token.empty() || ec != std::errc{} || ptr != end)
            throw ParseError("bad degree '" + std::string(token) + "' in sequence '" + std::string(text) + "'",
                             1, pos + 1);
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            throw ParseError("degree sequence '" + std::string(text) + "' is not strictly increasing");
    return DegreeSequence(std::move(out));
}

BettiTable::BettiTable(std::initializer_list<std::pair<Cell, Rational>> entries)
{
    for (const auto& [cell, value] : entries)
        set(cell.p, cell.q, value);
}

void BettiTable::set(int p, int q, const Rational& value)
{
    if (p < 0)
        throw Error("column index must be nonnegative, got " + std::to_string(p));
    Rational v = value;
    v.canonicalize();
    if (v < 0)
        throw NegativeEntry(p, q);
    if (v == 0)
        entries_.erase(Cell{p, q});
    else
        entries_[Cell{p, q}] = std::move(v);
}

Rational BettiTable::at(int p, int q) const
{
    auto it = entries_.find(Cell{p, q});
    return it == entries_.end() ? Rational(0) : it->second;
}

int BettiTable::projective_dimension() const
{
    return entries_.empty() ? -1 : entries_.rbegin()->first.p;
}

std::optional<int> BettiTable::regularity() const
{
    std::optional<int> out;
    for (const auto& [cell, value] : entries_)
        if (!out || cell.q > *out)
            out = cell.q;
    return out;
}

std::optional<int> BettiTable::min_row() const
{
    std::optional<int> out;
    for (const auto& [cell, value] : entries_)
        if (!out || cell.q < *out)
            out = cell.q;
    return out;
}

std::optional<int> BettiTable::column_min_row(int p) const
{
    auto it = entries_.lower_bound(Cell{p, std::numeric_limits<int>::min()});
    if (it == entries_.end() || it->first.p != p)
        return std::nullopt;
    return it->first.q;
}

bool BettiTable::all_integer() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& kv) { return is_integer(kv.second); });
}

BettiTable BettiTable::shifted(int rows) const
{
    BettiTable out;
    for (const auto& [cell, value] : entries_)
        out.entries_.emplace(Cell{cell.p, cell.q + rows}, value);
    return out;
}

BettiTable add(const BettiTable& a, const BettiTable& b)
{
    BettiTable out = a;
    for (const auto& [cell, value] : b.entries())
        out.set(cell.p, cell.q, out.at(cell.p, cell.q) + value);
    return out;
}

BettiTable scale(const BettiTable& a, const Rational& factor)
{
    Rational c = factor;
    c.canonicalize();
    if (c < 0)
        throw Error("betti tables can only be scaled by nonnegative rationals, got " + to_string(c));
    BettiTable out;
    if (c == 0)
        return out;
    for (const auto& [cell, value] : a.entries())
        out.set(cell.p, cell.q, value * c);
    return out;
}

BettiTable subtract_checked(const BettiTable& a, const BettiTable& b)
{
    BettiTable out = a;
    for (const auto& [cell, value] : b.entries()) {
        Rational diff = a.at(cell.p, cell.q) - value;
        if (diff < 0)
            throw NegativeEntry(cell.p, cell.q);
        out.set(cell.p, cell.q, diff);
    }
    return out;
}

IntPolynomial hilbert_numerator(const BettiTable& a)
{
    IntPolynomial out;
    for (const auto& [cell, value] : a.entries()) {
        if (!is_integer(value))
            throw Error("hilbert numerator needs integer entries; (" + std::to_string(cell.p) + ","
                        + std::to_string(cell.q) + ") is " + to_string(value));
        Integer c = value.get_num();
        out.add_term(cell.p + cell.q, cell.p % 2 == 0 ? c : Integer(-c));
    }
    return out;
}

}  // namespace bettikit
