#include "bettikit/selftest.hpp"

#include "bettikit/pure.hpp"

namespace bettikit {

std::vector<DegreeSequence> sequences_in_box(int e, int lo, int hi)
{
    std::vector<DegreeSequence> out;
    std::vector<int> d(static_cast<std::size_t>(e) + 1, 0);
    auto rec = [&](auto&& self, int k, int min_value) -> void {
        if (k > e) {
            out.emplace_back(d);
            return;
        }
        // leave room for the remaining e - k entries
        for (int v = min_value; v <= hi - (e - k); ++v) {
            d[static_cast<std::size_t>(k)] = v;
            self(self, k + 1, v + 1);
        }
    };
    if (e >= 1)
        rec(rec, 1, lo);
    return out;
}

SweepResult sweep_family_closed_forms(int max_e, int max_q)
{
    SweepResult r{"pi(d^{e,q}) matches closed forms", 0, {}};
    for (int e = 1; e <= max_e; ++e)
        for (int q = 1; q <= max_q; ++q) {
            ++r.cases;
            auto pd = hk_diagram(family_deq(e, q));
            bool ok = pd.multiplicity == Rational(binomial(e + q, q)) && pd.table.size() == static_cast<std::size_t>(e) + 1;
            for (int p = 1; p <= e; ++p)
                ok = ok && pd.table.at(p, q) == Rational(kappa_max(p, q, e));
            if (!ok)
                r.counterexamples.push_back("e=" + std::to_string(e) + " q=" + std::to_string(q));
        }
    return r;
}

SweepResult sweep_tilde_family(int max_e)
{
    SweepResult r{"pi(d~^{e,1}) matches next-to-maximal closed forms", 0, {}};
    for (int e = 2; e <= max_e; ++e) {
        ++r.cases;
        auto pd = hk_diagram(family_tilde(e, 1));
        bool ok = pd.multiplicity == e + 2 && pd.table.at(e, 2) == 1;
        for (int p = 1; p <= e - 1; ++p)
            ok = ok && pd.table.at(p, 1) == Rational(kappa_next_max(p, e));
        if (!ok)
            r.counterexamples.push_back("e=" + std::to_string(e));
    }
    return r;
}

SweepResult sweep_strand_bounds(int max_e, int max_q, int slack)
{
    SweepResult r{"strand bounds and equality conditions over degree sequences", 0, {}};
    for (int e = 1; e <= max_e; ++e)
        for (int q = 1; q <= max_q; ++q) {
            const DegreeSequence extremal = family_deq(e, q);
            const Rational min_mult(binomial(e + q, q));
            for (const auto& d : sequences_in_box(e, q + 1, q + e + slack)) {
                ++r.cases;
                auto pd = hk_diagram(d);
                bool some_equal = false;
                bool all_equal = true;
                bool bounded = true;
                for (int p = 1; p <= e; ++p) {
                    Rational observed = pd.table.at(p, q);
                    Rational bound(kappa_max(p, q, e));
                    bounded = bounded && observed <= bound;
                    some_equal = some_equal || observed == bound;
                    all_equal = all_equal && observed == bound;
                }
                bool mult_ok = pd.multiplicity >= min_mult;
                bool mult_equal = pd.multiplicity == min_mult;
                bool is_extremal = d == extremal;
                bool dual_ok = true;
                bool below = true;
                for (int k = 1; k <= e; ++k)
                    below = below && d[k] <= q + k;
                if (below)
                    dual_ok = pd.multiplicity <= min_mult;
                if (!bounded || !mult_ok || !dual_ok || some_equal != is_extremal || all_equal != is_extremal
                    || mult_equal != is_extremal)
                    r.counterexamples.push_back("q=" + std::to_string(q) + " d=(" + d.to_string() + ")");
            }
        }
    return r;
}

SweepResult sweep_next_below_max(int max_e)
{
    SweepResult r{"next-to-maximal values below maximal values", 0, {}};
    for (int e = 2; e <= max_e; ++e)
        for (int p = 1; p <= e - 1; ++p) {
            ++r.cases;
            if (!(kappa_next_max(p, e) < kappa_max(p, 1, e)))
                r.counterexamples.push_back("e=" + std::to_string(e) + " p=" + std::to_string(p));
        }
    return r;
}

SweepResult sweep_hk_exactness(int max_len, int max_degree)
{
    SweepResult r{"cleared pure diagrams satisfy the Herzog-Kuhl equations", 0, {}};
    for (int len = 1; len <= max_len; ++len)
        for (const auto& d : sequences_in_box(len, 1, max_degree)) {
            ++r.cases;
            auto poly = hilbert_numerator(cleared_table(hk_diagram(d)));
            if (poly.order_at_one() < len)
                r.counterexamples.push_back("d=(" + d.to_string() + ")");
        }
    return r;
}

Ideal random_ideal(std::mt19937_64& rng, FieldSpec field)
{
    std::uniform_int_distribution<int> vars_dist(2, 4);
    std::uniform_int_distribution<int> gens_dist(1, 3);
    std::uniform_int_distribution<int> deg_dist(1, 3);
    std::uniform_int_distribution<int> terms_dist(1, 4);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);

    Ideal ideal;
    ideal.num_vars = static_cast<std::size_t>(vars_dist(rng));
    ideal.field = field;
    const int gens = gens_dist(rng);
    while (static_cast<int>(ideal.generators.size()) < gens) {
        const unsigned degree = static_cast<unsigned>(deg_dist(rng));
        auto monomials = monomials_of_degree(ideal.num_vars, degree);
        std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
        Polynomial f(ideal.num_vars);
        for (int t = terms_dist(rng); t > 0; --t)
            f.add_term(monomials[pick(rng)], Rational(coeff_dist(rng)));
        if (!f.is_zero())
            ideal.generators.push_back(std::move(f));
    }
    return ideal;
}

SweepResult sweep_square_zero(std::size_t count, std::uint64_t seed)
{
    SweepResult r{"Koszul differential squares to zero", 0, {}};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        FieldSpec field = i % 2 == 0 ? FieldSpec::gf(32003) : FieldSpec::rational();
        KoszulComplex complex(random_ideal(rng, field));
        const int n = static_cast<int>(complex.ideal().num_vars);
        for (int q = 0; q <= 4; ++q)
            for (int p = 2; p <= n + 2; ++p) {
                ++r.cases;
                auto first = complex.differential(p, q);
                auto second = complex.differential(p - 1, q + 1);
                if (first.cols() == 0 || second.rows() == 0)
                    continue;
                if (!(second * first).is_zero())
                    r.counterexamples.push_back("ideal " + std::to_string(i) + " p=" + std::to_string(p)
                                                + " q=" + std::to_string(q));
            }
    }
    return r;
}

std::vector<SweepResult> run_selftest()
{
    return {
        sweep_family_closed_forms(10, 10),
        sweep_tilde_family(10),
        sweep_strand_bounds(5, 4, 3),
        sweep_next_below_max(8),
        sweep_hk_exactness(5, 9),
        sweep_square_zero(50, 20261019),
    };
}

}  // namespace bettikit
