#pragma once

// Sparse multivariate polynomials over the exact coefficient field.
// Terms are kept sorted descending in the polynomial's monomial order,
// with no zero coefficients stored; the text format is canonical.

#include "ringbench/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ringbench::exactalg {

enum class MonomialOrder { grevlex, lex };

using Exponents = std::vector<unsigned>;

unsigned exponents_total_degree(const Exponents& e);
/// a vs b in the given order: negative, zero, positive.
int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order);
bool monomial_divides(const Exponents& a, const Exponents& b);
Exponents monomial_mul(const Exponents& a, const Exponents& b);
/// b / a, requires a | b.
Exponents monomial_quotient(const Exponents& b, const Exponents& a);
Exponents monomial_lcm(const Exponents& a, const Exponents& b);

struct Term {
    Exponents mono;
    FieldElement coeff;
};

class SparsePolynomial {
  public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(unsigned nvars, MonomialOrder order = MonomialOrder::grevlex)
        : nvars_(nvars), order_(order) {}

    static SparsePolynomial constant(unsigned nvars, const FieldElement& c,
                                     MonomialOrder order = MonomialOrder::grevlex);
    /// x_{j+1} as a polynomial (j is 0-based).
    static SparsePolynomial variable(unsigned nvars, unsigned j,
                                     MonomialOrder order = MonomialOrder::grevlex);
    static SparsePolynomial from_terms(unsigned nvars, std::vector<Term> terms,
                                       MonomialOrder order = MonomialOrder::grevlex);

    unsigned variable_count() const { return nvars_; }
    MonomialOrder order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value (works for any polynomial).
    FieldElement constant_value() const;
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;
    unsigned total_degree() const;  // 0 for the zero polynomial
    unsigned degree_in(unsigned j) const;

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator-() const;
    SparsePolynomial operator*(const FieldElement& c) const;
    bool operator==(const SparsePolynomial& o) const;
    bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

    SparsePolynomial mul_term(const Exponents& mono, const FieldElement& coeff) const;

    SparsePolynomial with_order(MonomialOrder order) const;
    /// Re-embed into a ring with new_nvars variables, x_i -> x_{i+offset}.
    SparsePolynomial embedded(unsigned new_nvars, unsigned offset) const;
    /// Drop a variable that does not occur (renumbering the ones after it).
    SparsePolynomial dropped_variable(unsigned j) const;
    SparsePolynomial substitute_variable(unsigned j, const FieldElement& value) const;
    /// Full substitution x_i -> images[i]; images share a common ring.
    SparsePolynomial substitute(const std::vector<SparsePolynomial>& images) const;
    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    bool depends_on(unsigned j) const;

    /// Canonical text, e.g. "3/2*x1^2*x2 - 7".
    std::string to_string() const;
    static SparsePolynomial parse(const std::string& text, unsigned nvars,
                                  MonomialOrder order = MonomialOrder::grevlex,
                                  const ExtensionHandle& ext = nullptr);
    /// Highest x-index mentioned in a polynomial text (0 if none).
    static unsigned max_variable_index(const std::string& text);

  private:
    unsigned nvars_ = 0;
    MonomialOrder order_ = MonomialOrder::grevlex;
    std::vector<Term> terms_;  // descending in order_, no zero coefficients

    void normalize();
};

/// All monomials of nvars variables with total degree <= d, in
/// decreasing grevlex order. Used by degree-bounded linear algebra.
std::vector<Exponents> monomials_up_to_degree(unsigned nvars, unsigned d);

/// Dense coefficient vector of a univariate polynomial (by degree).
std::vector<FieldElement> dense_univariate(const SparsePolynomial& p);
SparsePolynomial from_dense_univariate(const std::vector<FieldElement>& coeffs,
                                       MonomialOrder order = MonomialOrder::grevlex);

/// Monic gcd of univariate polynomials over Q (Euclid).
std::vector<Rat> univariate_gcd_q(std::vector<Rat> a, std::vector<Rat> b);

}  // namespace ringbench::exactalg
