#pragma once

#include "bettikit/linalg.hpp"
#include "bettikit/table.hpp"

#include <map>
#include <memory>
#include <vector>

namespace bettikit {

// Exponent vector over x_0..x_r. Ordered graded-lex with x_0 > x_1 > ...
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents);

    std::size_t num_vars() const { return exponents_.size(); }
    unsigned degree() const { return degree_; }
    unsigned operator[](std::size_t i) const { return exponents_[i]; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    Monomial operator*(const Monomial& other) const;
    Monomial times_variable(std::size_t i) const;

    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

    // "x0*x2^3", "1" for the unit.
    std::string to_string() const;

private:
    std::vector<unsigned> exponents_;
    unsigned degree_ = 0;
};

// All monomials of the given degree in n variables, in decreasing order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, std::greater<>>;

    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    void add_term(const Monomial& m, const Rational& c);
    const Terms& terms() const { return terms_; }
    std::size_t num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    // Degree of the leading term; 0 for the zero polynomial.
    unsigned degree() const;

    bool operator==(const Polynomial&) const = default;

private:
    std::size_t num_vars_ = 0;
    Terms terms_;
};

// Homogeneous ideal in k[x_0..x_r], used as given (no saturation).
struct Ideal {
    std::size_t num_vars = 0;
    FieldSpec field;
    std::vector<Polynomial> generators;

    // Throws unless every generator is nonzero, homogeneous of degree >= 1,
    // and lives in num_vars variables.
    void validate() const;
    bool operator==(const Ideal&) const = default;
};

// M_q = S_q / I_q, presented by its standard monomials (the non-leading
// columns of the reduced echelon form of I_q).
struct GradedPiece {
    int degree = 0;
    std::vector<Monomial> ambient_basis;
    std::vector<Monomial> standard_basis;
    std::size_t ideal_dimension = 0;

    std::size_t dimension() const { return standard_basis.size(); }
};

struct BettiComputation {
    BettiTable table;
    // Rows q_max and q_max - 1 are empty. Advisory only.
    bool complete = false;
    FieldSpec field;
    int q_max = 0;
};

// Koszul complex of S/I over V = S_1:
//   wedge^{p+1} V (x) M_{q-1} -> wedge^p V (x) M_q -> wedge^{p-1} V (x) M_{q+1}
// Graded pieces are cached; once prepare(q) has run, the const queries up to
// that degree are safe to call concurrently.
class KoszulComplex {
public:
    explicit KoszulComplex(Ideal ideal);
    ~KoszulComplex();
    KoszulComplex(KoszulComplex&&) noexcept;
    KoszulComplex& operator=(KoszulComplex&&) noexcept;

    const Ideal& ideal() const;
    void prepare(int max_degree);

    GradedPiece piece(int q);
    std::size_t piece_dimension(int q);
    FieldMatrix differential(int p, int q);
    std::size_t differential_rank(int p, int q);
    std::size_t betti_number(int p, int q);
    BettiComputation betti_table(int q_max, unsigned threads = 0);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Strictly increasing index tuples of size k from {0..n-1}, lex order.
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k);

GradedPiece graded_piece(const Ideal& ideal, int q);
FieldMatrix koszul_differential(const Ideal& ideal, int p, int q);
std::size_t betti_number(const Ideal& ideal, int p, int q);
BettiComputation betti_table(const Ideal& ideal, int q_max);

// Compares sum (-1)^p kappa_{p,q} t^{p+q} with (1-t)^{r+1} sum_q dim M_q t^q
// through degree q_max.
bool hilbert_consistency(const Ideal& ideal, const BettiTable& table, int q_max);

}  // namespace bettikit
