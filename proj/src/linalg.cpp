#include "bettikit/linalg.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <map>

namespace bettikit {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::gf(std::uint32_t p)
{
    if (!is_prime(p) || p >= (1u << 31))
        throw Error("GF(p) needs a prime p below 2^31, got " + std::to_string(p));
    return {Kind::Prime, p};
}

std::string FieldSpec::name() const
{
    return is_rational() ? "rational" : "gf " + std::to_string(prime);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text == "rational" || text == "Q" || text == "QQ")
        return rational();
    std::string_view digits = text;
    if (text.starts_with("gf"))
        digits = text.substr(2);
    while (!digits.empty() && (digits.front() == ' ' || digits.front() == '('))
        digits.remove_prefix(1);
    if (!digits.empty() && digits.back() == ')')
        digits.remove_suffix(1);
    Integer p;
    try {
        p = parse_integer(digits);
    } catch (const ParseError&) {
        throw ParseError("unknown field '" + std::string(text) + "' (expected 'rational' or 'gf P')");
    }
    if (p <= 0 || p >= (Integer(1) << 31))
        throw ParseError("prime out of range: " + p.get_str());
    try {
        return gf(static_cast<std::uint32_t>(p.get_ui()));
    } catch (const Error& err) {
        throw ParseError(err.what());
    }
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (!is_prime(p))
        throw Error("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::add(Element a, Element b) const
{
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
}

PrimeField::Element PrimeField::sub(Element a, Element b) const
{
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
}

PrimeField::Element PrimeField::mul(Element a, Element b) const
{
    return static_cast<Element>(std::uint64_t{a} * b % p_);
}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0)
        throw Error("division by zero in GF(" + std::to_string(p_) + ")");
    // Fermat: a^(p-2)
    Element result = 1;
    Element base = a;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

PrimeField::Element PrimeField::from_rational(const Rational& r) const
{
    auto reduce = [this](const Integer& z) {
        Integer m;
        mpz_fdiv_r_ui(m.get_mpz_t(), z.get_mpz_t(), p_);
        return static_cast<Element>(m.get_ui());
    };
    Element den = reduce(r.get_den());
    if (den == 0)
        throw Error("coefficient " + to_string(r) + " has a denominator divisible by " + std::to_string(p_));
    return mul(reduce(r.get_num()), inv(den));
}

std::size_t rank(const PrimeField& field, DenseMatrix<PrimeField::Element> m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.swap_rows(r, pivot);
        auto scale = field.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) = field.mul(m(r, j), scale);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            auto factor = m(i, c);
            if (factor == 0)
                continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
        }
        ++r;
    }
    return r;
}

std::size_t bareiss_rank(DenseMatrix<Integer> m)
{
    // Fraction-free elimination: after step k every entry below the pivots is a
    // (k+1)-minor of the input, so the division by the previous pivot is exact.
    std::size_t r = 0;
    Integer previous = 1;
    Integer tmp;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        m.swap_rows(r, pivot);
        const Integer& pv = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            Integer factor = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                tmp = pv * m(i, j) - factor * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
            }
            m(i, c) = 0;
        }
        previous = pv;
        ++r;
    }
    return r;
}

std::size_t rank(const RationalField&, const DenseMatrix<Rational>& m)
{
    DenseMatrix<Integer> cleared(m.rows(), m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                den = lcm(den, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                cleared(i, j) = m(i, j).get_num() * (den / m(i, j).get_den());
    }
    return bareiss_rank(std::move(cleared));
}

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), entries_(rows, cols, Rational(0))
{
}

void FieldMatrix::set(std::size_t r, std::size_t c, const Rational& value)
{
    if (field_.is_rational())
        entries_(r, c) = value;
    else
        entries_(r, c) = PrimeField(field_.prime).from_rational(value);
}

bool FieldMatrix::is_zero() const
{
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (entries_(i, j) != 0)
                return false;
    return true;
}

std::size_t FieldMatrix::rank() const
{
    if (field_.is_rational())
        return bettikit::rank(RationalField{}, entries_);
    PrimeField f(field_.prime);
    DenseMatrix<PrimeField::Element> m(rows(), cols(), 0);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            m(i, j) = static_cast<PrimeField::Element>(entries_(i, j).get_num().get_ui());
    return bettikit::rank(f, std::move(m));
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& other) const
{
    if (!(field_ == other.field_))
        throw Error("matrix product over different fields");
    if (cols() != other.rows())
        throw Error("matrix product dimension mismatch");
    FieldMatrix out(field_, rows(), other.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t k = 0; k < cols(); ++k) {
            if (entries_(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < other.cols(); ++j)
                if (other.entries_(k, j) != 0)
                    out.entries_(i, j) += entries_(i, k) * other.entries_(k, j);
        }
    if (!field_.is_rational()) {
        PrimeField f(field_.prime);
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j)
                out.entries_(i, j) = f.from_rational(out.entries_(i, j));
    }
    return out;
}

}  // namespace bettikit

namespace bettikit {

namespace {

void remove_content(SparseIntegerRow& row)
{
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            return;
    }
    if (row.front().second < 0)
        g = -g;
    for (auto& [c, v] : row)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t sparse_fraction_free_rank(std::vector<SparseIntegerRow> rows)
{
    // Short rows first keeps fill-in down.
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::map<std::size_t, SparseIntegerRow> pivots;
    SparseIntegerRow merged;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end())
                break;
            const SparseIntegerRow& pivot = it->second;
            const Integer a = pivot.front().second;
            const Integer b = row.front().second;
            // row <- a * row - b * pivot; the leading entry cancels.
            merged.clear();
            std::size_t i = 1;
            std::size_t j = 1;
            while (i < row.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                    merged.emplace_back(row[i].first, a * row[i].second);
                    ++i;
                } else if (i == row.size() || pivot[j].first < row[i].first) {
                    merged.emplace_back(pivot[j].first, -b * pivot[j].second);
                    ++j;
                } else {
                    Integer v = a * row[i].second - b * pivot[j].second;
                    if (v != 0)
                        merged.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            row.swap(merged);
            if (!row.empty())
                remove_content(row);
        }
        if (!row.empty()) {
            auto col = row.front().first;
            pivots.emplace(col, std::move(row));
        }
    }
    return pivots.size();
}

}  // namespace bettikit
