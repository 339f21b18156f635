#pragma once

// Polynomial ideals: multivariate division, Buchberger's algorithm with
// reduced-basis output, and the decision kernels built on it (membership,
// radical membership via Rabinowitsch, intersection and quotient by
// elimination, rational root extraction).

#include "ringbench/poly.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

namespace ringbench::exactalg {

struct DivisionResult {
    std::vector<SparsePolynomial> quotients;  // one per divisor
    SparsePolynomial remainder;
};

/// Multivariate division: f = sum q_i d_i + r, no term of r divisible by
/// any divisor head term. Zero divisors are permitted and get zero
/// quotients. With an empty divisor list the remainder is f itself.
DivisionResult poly_divide(const SparsePolynomial& f,
                           const std::vector<SparsePolynomial>& divisors);

/// Generator list with a lazily computed reduced Groebner basis for the
/// fixed monomial order. Immutable after construction; the cache fills
/// under a mutex and is observationally transparent.
class IdealPresentation {
  public:
    IdealPresentation() = default;
    IdealPresentation(unsigned nvars, std::vector<SparsePolynomial> generators,
                      MonomialOrder order = MonomialOrder::grevlex);

    unsigned variable_count() const { return nvars_; }
    MonomialOrder order() const { return order_; }
    const std::vector<SparsePolynomial>& generators() const { return gens_; }

    /// The reduced Groebner basis (computing and caching it on first use).
    const std::vector<SparsePolynomial>& groebner() const;
    bool has_cached_basis() const;

    bool is_zero_ideal() const;
    bool is_unit_ideal() const { return contains_one(); }
    bool contains_one() const;

    /// Normal form of f against the reduced basis.
    SparsePolynomial reduce(const SparsePolynomial& f) const;

    IdealPresentation(const IdealPresentation& o);
    IdealPresentation& operator=(const IdealPresentation& o);
    IdealPresentation(IdealPresentation&&) = default;
    IdealPresentation& operator=(IdealPresentation&&) = default;

  private:
    unsigned nvars_ = 0;
    MonomialOrder order_ = MonomialOrder::grevlex;
    std::vector<SparsePolynomial> gens_;
    mutable std::shared_ptr<const std::vector<SparsePolynomial>> basis_;
    mutable std::unique_ptr<std::mutex> lock_ = std::make_unique<std::mutex>();
};

/// Reduced Groebner basis of the generators as a fresh presentation
/// whose generator list IS the basis. Idempotent.
IdealPresentation buchberger(const IdealPresentation& ideal);

bool ideal_member(const SparsePolynomial& f, const IdealPresentation& ideal);

/// f in sqrt(ideal), decided by 1 in ideal + <1 - t*f> with a fresh t.
bool radical_member(const SparsePolynomial& f, const IdealPresentation& ideal);

/// Generators of a ∩ b via elimination of t from t*a + (1-t)*b.
IdealPresentation ideal_intersect(const IdealPresentation& a, const IdealPresentation& b);

/// (a : f) = { g : g*f in a }; f must be nonzero.
IdealPresentation ideal_quotient(const IdealPresentation& a, const SparsePolynomial& f);

/// Sum of ideals (concatenated generators).
IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b);
IdealPresentation ideal_sum(const IdealPresentation& a, const SparsePolynomial& f);

/// Product ideal (pairwise generator products).
IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b);

/// Exact quotient f / g when g divides f; nullopt otherwise.
std::optional<SparsePolynomial> poly_exact_divide(const SparsePolynomial& f,
                                                  const SparsePolynomial& g);

/// All rational roots of a nonzero univariate polynomial over Q.
std::vector<Rat> univariate_rational_roots(const SparsePolynomial& p);

}  // namespace ringbench::exactalg
