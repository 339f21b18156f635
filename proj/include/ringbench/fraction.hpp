#pragma once

// Quotients of multivariate polynomials with light normalization:
// common linear factors are cancelled per variable and the denominator
// is scaled monic. Full multivariate gcd is deliberately not attempted.

#include "ringbench/ideal.hpp"

namespace ringbench::exactalg {

/// The set of a with (x_{j+1} - a) dividing g, computed as the common
/// rational roots of the univariate coefficient polynomials of g grouped
/// by the monomials in the other variables (gcd, then root extraction).
std::vector<FieldElement> linear_factors_in_variable(const SparsePolynomial& g, unsigned j);

/// Multiplicity of (x_{j+1} - a) in g (0 if it does not divide).
unsigned linear_factor_multiplicity(const SparsePolynomial& g, unsigned j, const FieldElement& a);

/// (x_{j+1} - a) as a polynomial.
SparsePolynomial linear_prime(unsigned nvars, unsigned j, const FieldElement& a,
                              MonomialOrder order = MonomialOrder::grevlex);

class Fraction {
  public:
    Fraction() = default;
    /// den must be nonzero; the pair is normalized on construction.
    Fraction(SparsePolynomial num, SparsePolynomial den);
    static Fraction from_polynomial(SparsePolynomial p);
    static Fraction constant(unsigned nvars, const FieldElement& c);

    const SparsePolynomial& num() const { return num_; }
    const SparsePolynomial& den() const { return den_; }
    unsigned variable_count() const { return num_.variable_count(); }
    bool is_zero() const { return num_.is_zero(); }

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction operator-() const;
    /// Exact equality of the represented rational functions (cross product).
    bool operator==(const Fraction& o) const;
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    /// Whether den | num exactly; fills the quotient when so.
    bool is_polynomial(SparsePolynomial* quotient = nullptr) const;

    /// ord of the fraction at (x_{j+1} - a): multiplicity in the numerator
    /// minus multiplicity in the denominator. Representation independent.
    long order_at_linear(unsigned j, const FieldElement& a) const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;  // den(point) != 0

    /// Canonical text "num / den"; plain "num" when the denominator is 1.
    std::string to_string() const;
    static Fraction parse(const std::string& text, unsigned nvars,
                          MonomialOrder order = MonomialOrder::grevlex,
                          const ExtensionHandle& ext = nullptr);

  private:
    SparsePolynomial num_, den_;
    void normalize();
};

}  // namespace ringbench::exactalg
