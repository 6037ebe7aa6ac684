#include "bettikit/koszul.hpp"

#include "bettikit/errors.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <type_traits>
#include <variant>

namespace bettikit {

Monomial::Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents))
{
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (num_vars() != other.num_vars())
        throw Error("monomials over different variable counts");
    std::vector<unsigned> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += other.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::times_variable(std::size_t i) const
{
    Monomial out = *this;
    ++out.exponents_[i];
    ++out.degree_;
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const
{
    if (auto c = degree_ <=> other.degree_; c != 0)
        return c;
    return exponents_ <=> other.exponents_;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "x" + std::to_string(i);
        if (exponents_[i] > 1)
            out += "^" + std::to_string(exponents_[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree)
{
    std::vector<Monomial> out;
    if (num_vars == 0) {
        if (degree == 0)
            out.emplace_back(std::vector<unsigned>{});
        return out;
    }
    // Lex-decreasing enumeration: exponent of x_0 from high to low, recursively.
    std::vector<unsigned> e(num_vars, 0);
    auto fill = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var + 1 == num_vars) {
            e[var] = remaining;
            out.emplace_back(e);
            return;
        }
        for (unsigned k = remaining + 1; k-- > 0;) {
            e[var] = k;
            self(self, var + 1, remaining - k);
        }
    };
    fill(fill, 0, degree);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (m.num_vars() != num_vars_)
        throw Error("monomial " + m.to_string() + " does not match " + std::to_string(num_vars_) + " variables");
    Rational value = c;
    value.canonicalize();
    if (value == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, value);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

void Ideal::validate() const
{
    if (num_vars == 0)
        throw Error("ideal needs at least one variable");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        std::string which = "generator " + std::to_string(i + 1);
        if (g.num_vars() != num_vars)
            throw Error(which + " uses " + std::to_string(g.num_vars()) + " variables, ideal has "
                        + std::to_string(num_vars));
        if (g.is_zero())
            throw Error(which + " is zero");
        if (!g.is_homogeneous())
            throw Error(which + " is not homogeneous");
        if (g.degree() == 0)
            throw Error(which + " is a constant");
    }
}

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

std::size_t binomial_size(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

template <class Field>
class Engine {
public:
    using Element = typename Field::Element;
    using SparseVector = std::vector<std::pair<std::size_t, Element>>;

    struct Piece {
        int degree = 0;
        std::vector<Monomial> ambient;
        std::map<Monomial, std::size_t, std::greater<>> index;
        // Fully reduced basis of I_q, rows sorted by pivot.
        std::vector<std::vector<Element>> ideal_rows;
        std::vector<std::size_t> pivots;
        std::vector<std::size_t> standard;         // ambient index of each standard monomial
        std::vector<long> standard_position;       // ambient index -> position in standard, or -1
        // multiplication[s * n + i] = normal form of x_i * standard[s] in M_{q+1}
        std::vector<SparseVector> multiplication;
    };

    Engine(Field field, const Ideal& ideal) : field_(std::move(field)), n_(ideal.num_vars)
    {
        for (const auto& g : ideal.generators) {
            SparseGen sg{static_cast<int>(g.degree()), {}};
            for (const auto& [m, c] : g.terms())
                sg.terms.emplace_back(m, field_.from_rational(c));
            generators_.push_back(std::move(sg));
        }
    }

    void prepare(int max_degree)
    {
        // Pieces through max_degree + 1, multiplication tables through max_degree.
        while (static_cast<int>(pieces_.size()) <= max_degree + 1)
            build_piece(static_cast<int>(pieces_.size()));
        for (int q = 0; q <= max_degree; ++q)
            if (pieces_[q].multiplication.empty() && !pieces_[q].standard.empty())
                build_multiplication(q);
    }

    int prepared_degree() const { return static_cast<int>(pieces_.size()) - 2; }

    const Piece* piece(int q) const
    {
        if (q < 0)
            return nullptr;
        return &pieces_.at(static_cast<std::size_t>(q));
    }

    std::size_t dim(int q) const { return q < 0 ? 0 : pieces_.at(q).standard.size(); }

    DenseMatrix<Element> differential(int p, int q) const
    {
        std::size_t src_dim = p < 0 ? 0 : binomial_size(n_, static_cast<std::size_t>(p)) * dim(q);
        std::size_t dst_dim = p < 1 ? 0 : binomial_size(n_, static_cast<std::size_t>(p - 1)) * dim(q + 1);
        DenseMatrix<Element> m(dst_dim, src_dim, field_.zero());
        if (src_dim == 0 || dst_dim == 0)
            return m;

        const auto source = wedge_basis(n_, static_cast<std::size_t>(p));
        const auto target = wedge_basis(n_, static_cast<std::size_t>(p - 1));
        std::map<std::vector<std::size_t>, std::size_t> target_index;
        for (std::size_t i = 0; i < target.size(); ++i)
            target_index.emplace(target[i], i);

        const Piece& here = pieces_.at(q);
        const std::size_t m_here = here.standard.size();
        const std::size_t m_next = dim(q + 1);
        std::vector<std::size_t> face(static_cast<std::size_t>(p - 1));

        for (std::size_t w = 0; w < source.size(); ++w) {
            const auto& wedge = source[w];
            for (std::size_t j = 0; j < wedge.size(); ++j) {
                // e_{i_1} ^ ... ^ e_{i_p} -> (-1)^j (omit i_j) (x) x_{i_j} f
                std::size_t out = 0;
                for (std::size_t k = 0; k < wedge.size(); ++k)
                    if (k != j)
                        face[out++] = wedge[k];
                const std::size_t row_block = target_index.at(face) * m_next;
                const bool negate = j % 2 == 1;
                for (std::size_t s = 0; s < m_here; ++s) {
                    const std::size_t col = w * m_here + s;
                    for (const auto& [t, c] : here.multiplication[s * n_ + wedge[j]]) {
                        auto& cell = m(row_block + t, col);
                        cell = negate ? field_.sub(cell, c) : field_.add(cell, c);
                    }
                }
            }
        }
        return m;
    }

    std::size_t differential_rank(int p, int q) const
    {
        auto m = differential(p, q);
        if (m.rows() == 0 || m.cols() == 0)
            return 0;
        if constexpr (std::is_same_v<Field, RationalField>)
            return sparse_fraction_free_rank(cleared_rows(m));
        else
            return rank(field_, std::move(m));
    }

    std::size_t chain_dimension(int p, int q) const
    {
        if (p < 0 || static_cast<std::size_t>(p) > n_)
            return 0;
        return binomial_size(n_, static_cast<std::size_t>(p)) * dim(q);
    }

    const Field& field() const { return field_; }

    // Each row of a rational matrix scaled by the lcm of its denominators.
    static std::vector<SparseIntegerRow> cleared_rows(const DenseMatrix<Rational>& m)
    {
        std::vector<SparseIntegerRow> rows;
        rows.reserve(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Integer den = 1;
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j) != 0)
                    den = lcm(den, m(i, j).get_den());
            SparseIntegerRow row;
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j) != 0)
                    row.emplace_back(j, m(i, j).get_num() * (den / m(i, j).get_den()));
            if (!row.empty())
                rows.push_back(std::move(row));
        }
        return rows;
    }

private:
    struct SparseGen {
        int degree;
        std::vector<std::pair<Monomial, Element>> terms;
    };

    // Reduces `row` against the current basis; if something survives, it is
    // normalized and added, and its pivot is cleared from the other rows.
    void insert_row(Piece& piece, std::vector<Element> row)
    {
        for (std::size_t i = 0; i < piece.pivots.size(); ++i) {
            auto c = row[piece.pivots[i]];
            if (field_.is_zero(c))
                continue;
            const auto& basis = piece.ideal_rows[i];
            for (std::size_t j = piece.pivots[i]; j < row.size(); ++j)
                if (!field_.is_zero(basis[j]))
                    row[j] = field_.sub(row[j], field_.mul(c, basis[j]));
        }
        auto lead = std::find_if(row.begin(), row.end(), [this](const Element& x) { return !field_.is_zero(x); });
        if (lead == row.end())
            return;
        const std::size_t pivot = static_cast<std::size_t>(lead - row.begin());
        auto scale = field_.inv(row[pivot]);
        for (std::size_t j = pivot; j < row.size(); ++j)
            row[j] = field_.mul(row[j], scale);
        for (auto& other : piece.ideal_rows) {
            auto c = other[pivot];
            if (field_.is_zero(c))
                continue;
            for (std::size_t j = pivot; j < row.size(); ++j)
                if (!field_.is_zero(row[j]))
                    other[j] = field_.sub(other[j], field_.mul(c, row[j]));
        }
        auto pos = std::lower_bound(piece.pivots.begin(), piece.pivots.end(), pivot) - piece.pivots.begin();
        piece.pivots.insert(piece.pivots.begin() + pos, pivot);
        piece.ideal_rows.insert(piece.ideal_rows.begin() + pos, std::move(row));
    }

    void build_piece(int q)
    {
        Piece piece;
        piece.degree = q;
        piece.ambient = monomials_of_degree(n_, static_cast<unsigned>(q));
        for (std::size_t i = 0; i < piece.ambient.size(); ++i)
            piece.index.emplace(piece.ambient[i], i);
        const std::size_t width = piece.ambient.size();

        // I_q = S_1 * I_{q-1} + span of the degree-q generators.
        if (q > 0) {
            const Piece& prev = pieces_[q - 1];
            for (const auto& basis : prev.ideal_rows) {
                for (std::size_t v = 0; v < n_; ++v) {
                    std::vector<Element> row(width, field_.zero());
                    for (std::size_t j = 0; j < basis.size(); ++j)
                        if (!field_.is_zero(basis[j]))
                            row[piece.index.at(prev.ambient[j].times_variable(v))] = basis[j];
                    insert_row(piece, std::move(row));
                }
            }
        }
        for (const auto& g : generators_) {
            if (g.degree != q)
                continue;
            std::vector<Element> row(width, field_.zero());
            for (const auto& [m, c] : g.terms)
                row[piece.index.at(m)] = field_.add(row[piece.index.at(m)], c);
            insert_row(piece, std::move(row));
        }

        piece.standard_position.assign(width, -1);
        std::size_t next_pivot = 0;
        for (std::size_t j = 0; j < width; ++j) {
            if (next_pivot < piece.pivots.size() && piece.pivots[next_pivot] == j) {
                ++next_pivot;
                continue;
            }
            piece.standard_position[j] = static_cast<long>(piece.standard.size());
            piece.standard.push_back(j);
        }
        pieces_.push_back(std::move(piece));
    }

    // Coordinates of the monomial `m` (in the ambient basis of `piece`) modulo I_q.
    SparseVector normal_form(const Piece& piece, std::size_t ambient_index) const
    {
        SparseVector out;
        if (piece.standard_position[ambient_index] >= 0) {
            out.emplace_back(static_cast<std::size_t>(piece.standard_position[ambient_index]), field_.one());
            return out;
        }
        // m is a pivot: m = -(rest of its basis row) mod I_q, and the rest is standard.
        auto it = std::lower_bound(piece.pivots.begin(), piece.pivots.end(), ambient_index);
        const auto& row = piece.ideal_rows[static_cast<std::size_t>(it - piece.pivots.begin())];
        for (std::size_t j = ambient_index + 1; j < row.size(); ++j)
            if (!field_.is_zero(row[j]) && piece.standard_position[j] >= 0)
                out.emplace_back(static_cast<std::size_t>(piece.standard_position[j]), field_.neg(row[j]));
        return out;
    }

    void build_multiplication(int q)
    {
        Piece& here = pieces_[q];
        const Piece& next = pieces_[q + 1];
        here.multiplication.resize(here.standard.size() * n_);
        for (std::size_t s = 0; s < here.standard.size(); ++s) {
            const Monomial& m = here.ambient[here.standard[s]];
            for (std::size_t v = 0; v < n_; ++v)
                here.multiplication[s * n_ + v] = normal_form(next, next.index.at(m.times_variable(v)));
        }
    }

    Field field_;
    std::size_t n_;
    std::vector<SparseGen> generators_;
    std::vector<Piece> pieces_;
};

}  // namespace

struct KoszulComplex::Impl {
    Ideal ideal;
    std::variant<Engine<PrimeField>, Engine<RationalField>> engine;

    static std::variant<Engine<PrimeField>, Engine<RationalField>> make(const Ideal& ideal)
    {
        if (ideal.field.is_rational())
            return Engine<RationalField>(RationalField{}, ideal);
        return Engine<PrimeField>(PrimeField(ideal.field.prime), ideal);
    }

    explicit Impl(Ideal i) : ideal(std::move(i)), engine(make(ideal)) {}

    void ensure(int q)
    {
        std::visit([q](auto& e) {
            if (e.prepared_degree() < q)
                e.prepare(q);
        }, engine);
    }
};

KoszulComplex::KoszulComplex(Ideal ideal)
{
    ideal.validate();
    impl_ = std::make_unique<Impl>(std::move(ideal));
}

KoszulComplex::~KoszulComplex() = default;
KoszulComplex::KoszulComplex(KoszulComplex&&) noexcept = default;
KoszulComplex& KoszulComplex::operator=(KoszulComplex&&) noexcept = default;

const Ideal& KoszulComplex::ideal() const { return impl_->ideal; }

void KoszulComplex::prepare(int max_degree) { impl_->ensure(max_degree); }

GradedPiece KoszulComplex::piece(int q)
{
    GradedPiece out;
    out.degree = q;
    if (q < 0)
        return out;
    impl_->ensure(q);
    std::visit([&](auto& e) {
        const auto* p = e.piece(q);
        out.ambient_basis = p->ambient;
        for (auto j : p->standard)
            out.standard_basis.push_back(p->ambient[j]);
        out.ideal_dimension = p->pivots.size();
    }, impl_->engine);
    return out;
}

std::size_t KoszulComplex::piece_dimension(int q)
{
    if (q < 0)
        return 0;
    impl_->ensure(q);
    return std::visit([q](auto& e) { return e.dim(q); }, impl_->engine);
}

FieldMatrix KoszulComplex::differential(int p, int q)
{
    impl_->ensure(std::max(q, 0));
    return std::visit([&](auto& e) {
        auto m = e.differential(p, q);
        FieldMatrix out(impl_->ideal.field, m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!e.field().is_zero(m(i, j)))
                    out.set(i, j, e.field().to_rational(m(i, j)));
        return out;
    }, impl_->engine);
}

std::size_t KoszulComplex::differential_rank(int p, int q)
{
    impl_->ensure(std::max(q, 0));
    return std::visit([&](auto& e) { return e.differential_rank(p, q); }, impl_->engine);
}

std::size_t KoszulComplex::betti_number(int p, int q)
{
    if (p < 0 || q < 0)
        return 0;
    impl_->ensure(q);
    return std::visit([&](auto& e) {
        return e.chain_dimension(p, q) - e.differential_rank(p, q) - e.differential_rank(p + 1, q - 1);
    }, impl_->engine);
}

BettiComputation KoszulComplex::betti_table(int q_max, unsigned threads)
{
    if (q_max < 1)
        throw Error("q_max must be at least 1");
    impl_->ensure(q_max);
    const int n = static_cast<int>(impl_->ideal.num_vars);

    BettiComputation out;
    out.field = impl_->ideal.field;
    out.q_max = q_max;

    // rank(p, q) for 1 <= p <= n, 0 <= q <= q_max; everything else is zero.
    std::vector<std::pair<int, int>> cells;
    for (int q = 0; q <= q_max; ++q)
        for (int p = 1; p <= n; ++p)
            cells.emplace_back(p, q);
    std::vector<std::size_t> ranks(cells.size(), 0);

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));

    std::visit([&](const auto& e) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < cells.size(); i = next++)
                ranks[i] = e.differential_rank(cells[i].first, cells[i].second);
        };
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }, impl_->engine);

    auto rank_at = [&](int p, int q) -> std::size_t {
        if (p < 1 || p > n || q < 0 || q > q_max)
            return 0;
        return ranks[static_cast<std::size_t>(q * n + (p - 1))];
    };

    std::visit([&](const auto& e) {
        for (int q = 0; q <= q_max; ++q)
            for (int p = 0; p <= n; ++p) {
                std::size_t kappa = e.chain_dimension(p, q) - rank_at(p, q) - rank_at(p + 1, q - 1);
                if (kappa)
                    out.table.set(p, q, Rational(static_cast<unsigned long>(kappa)));
            }
    }, impl_->engine);

    auto row_empty = [&](int q) {
        for (int p = 0; p <= n; ++p)
            if (out.table.contains(p, q))
                return false;
        return true;
    };
    out.complete = row_empty(q_max) && row_empty(q_max - 1);
    return out;
}

GradedPiece graded_piece(const Ideal& ideal, int q) { return KoszulComplex(ideal).piece(q); }

FieldMatrix koszul_differential(const Ideal& ideal, int p, int q)
{
    return KoszulComplex(ideal).differential(p, q);
}

std::size_t betti_number(const Ideal& ideal, int p, int q) { return KoszulComplex(ideal).betti_number(p, q); }

BettiComputation betti_table(const Ideal& ideal, int q_max) { return KoszulComplex(ideal).betti_table(q_max); }

bool hilbert_consistency(const Ideal& ideal, const BettiTable& table, int q_max)
{
    if (!table.all_integer())
        return false;
    KoszulComplex complex(ideal);
    IntPolynomial series;
    for (int q = 0; q <= q_max; ++q)
        series.add_term(q, Integer(static_cast<unsigned long>(complex.piece_dimension(q))));
    IntPolynomial rhs = one_minus_t_power(static_cast<int>(ideal.num_vars)) * series;
    IntPolynomial lhs = hilbert_numerator(table);
    for (int k = 0; k <= q_max; ++k)
        if (lhs.coefficient(k) != rhs.coefficient(k))
            return false;
    return true;
}

}  // namespace bettikit
