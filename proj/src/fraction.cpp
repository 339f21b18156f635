#include "ringbench/fraction.hpp"

#include <map>

namespace ringbench::exactalg {

std::vector<FieldElement> linear_factors_in_variable(const SparsePolynomial& g, unsigned j) {
    if (g.is_zero()) throw std::domain_error("linear factors of the zero polynomial");
    if (j >= g.variable_count()) throw std::domain_error("variable index out of range");
    // group terms by the exponents of the other variables
    std::map<Exponents, std::vector<Rat>> groups;
    for (const Term& t : g.terms()) {
        if (!t.coeff.is_rational())
            throw std::domain_error("linear factor search needs rational coefficients");
        Exponents others = t.mono;
        unsigned dj = others[j];
        others[j] = 0;
        auto& dense = groups[others];
        if (dense.size() <= dj) dense.resize(dj + 1, Rat(0));
        dense[dj] += t.coeff.rational();
    }
    std::vector<Rat> g_common;
    bool first = true;
    for (auto& [mono, dense] : groups) {
        if (first) {
            g_common = univariate_gcd_q(dense, {});
            first = false;
        } else {
            g_common = univariate_gcd_q(g_common, dense);
        }
        if (g_common.size() == 1) break;  // gcd already constant
    }
    std::vector<FieldElement> out;
    if (g_common.size() >= 2) {
        std::vector<FieldElement> dense;
        for (const Rat& c : g_common) dense.emplace_back(c);
        for (const Rat& r : univariate_rational_roots(from_dense_univariate(dense)))
            out.emplace_back(r);
    }
    return out;
}

SparsePolynomial linear_prime(unsigned nvars, unsigned j, const FieldElement& a,
                              MonomialOrder order) {
    return SparsePolynomial::variable(nvars, j, order) -
           SparsePolynomial::constant(nvars, a, order);
}

unsigned linear_factor_multiplicity(const SparsePolynomial& g, unsigned j,
                                    const FieldElement& a) {
    if (g.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    SparsePolynomial lin = linear_prime(g.variable_count(), j, a, g.order());
    unsigned m = 0;
    SparsePolynomial h = g;
    while (true) {
        auto q = poly_exact_divide(h, lin);
        if (!q) return m;
        h = std::move(*q);
        ++m;
    }
}

Fraction::Fraction(SparsePolynomial num, SparsePolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
    if (num_.variable_count() != den_.variable_count())
        throw std::domain_error("fraction arity mismatch");
    normalize();
}

Fraction Fraction::from_polynomial(SparsePolynomial p) {
    unsigned n = p.variable_count();
    MonomialOrder o = p.order();
    return Fraction(std::move(p), SparsePolynomial::constant(n, FieldElement(1), o));
}

Fraction Fraction::constant(unsigned nvars, const FieldElement& c) {
    return from_polynomial(SparsePolynomial::constant(nvars, c));
}

void Fraction::normalize() {
    if (num_.is_zero()) {
        den_ = SparsePolynomial::constant(den_.variable_count(), FieldElement(1), den_.order());
        return;
    }
    if (den_.is_constant()) {
        num_ = num_ * den_.constant_value().inverse();
        den_ = SparsePolynomial::constant(den_.variable_count(), FieldElement(1), den_.order());
        return;
    }
    // cancel detected common linear factors, variable by variable
    bool rational_coeffs = true;
    for (const Term& t : num_.terms()) rational_coeffs &= t.coeff.is_rational();
    for (const Term& t : den_.terms()) rational_coeffs &= t.coeff.is_rational();
    if (rational_coeffs) {
        for (unsigned j = 0; j < num_.variable_count(); ++j) {
            for (const FieldElement& a : linear_factors_in_variable(den_, j)) {
                unsigned mn = linear_factor_multiplicity(num_, j, a);
                if (mn == 0) continue;
                unsigned md = linear_factor_multiplicity(den_, j, a);
                unsigned cancel = std::min(mn, md);
                SparsePolynomial lin = linear_prime(num_.variable_count(), j, a, num_.order());
                for (unsigned k = 0; k < cancel; ++k) {
                    num_ = *poly_exact_divide(num_, lin);
                    den_ = *poly_exact_divide(den_, lin);
                }
                if (den_.is_constant()) break;
            }
            if (den_.is_constant()) break;
        }
        if (den_.is_constant()) {
            num_ = num_ * den_.constant_value().inverse();
            den_ = SparsePolynomial::constant(den_.variable_count(), FieldElement(1),
                                              den_.order());
            return;
        }
    }
    // scale the denominator monic
    if (!den_.leading().coeff.is_one()) {
        FieldElement inv = den_.leading().coeff.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.num_.is_zero()) throw std::domain_error("division by the zero fraction");
    return Fraction(num_ * o.den_, den_ * o.num_);
}

bool Fraction::operator==(const Fraction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

bool Fraction::is_polynomial(SparsePolynomial* quotient) const {
    auto q = poly_exact_divide(num_, den_);
    if (!q) return false;
    if (quotient) *quotient = std::move(*q);
    return true;
}

long Fraction::order_at_linear(unsigned j, const FieldElement& a) const {
    if (num_.is_zero()) throw std::domain_error("order of the zero fraction");
    long up = static_cast<long>(linear_factor_multiplicity(num_, j, a));
    long down = static_cast<long>(linear_factor_multiplicity(den_, j, a));
    return up - down;
}

FieldElement Fraction::evaluate(const std::vector<FieldElement>& point) const {
    FieldElement d = den_.evaluate(point);
    if (d.is_zero()) throw std::domain_error("fraction evaluated at a denominator zero");
    return num_.evaluate(point) / d;
}

std::string Fraction::to_string() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
    return num_.to_string() + " / " + den_.to_string();
}

Fraction Fraction::parse(const std::string& text, unsigned nvars, MonomialOrder order,
                         const ExtensionHandle& ext) {
    // the separator is a slash surrounded by spaces; coefficient slashes
    // are never spaced
    std::size_t pos = text.find(" / ");
    if (pos == std::string::npos)
        return from_polynomial(SparsePolynomial::parse(text, nvars, order, ext));
    return Fraction(SparsePolynomial::parse(text.substr(0, pos), nvars, order, ext),
                    SparsePolynomial::parse(text.substr(pos + 3), nvars, order, ext));
}

}  // namespace ringbench::exactalg
