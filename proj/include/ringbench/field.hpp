#pragma once

// The computable coefficient field: exact rationals, or elements of a
// simple extension Q(alpha) given by a certified-irreducible monic
// minimal polynomial. All values are immutable after construction.

#include "ringbench/arith.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ringbench::exactalg {

/// A simple extension Q(alpha). The minimal polynomial is monic,
/// stored dense by degree, and certified irreducible at construction
/// by trial factorization up to degree/2 (Kronecker interpolation).
class ExtensionDescriptor {
  public:
    /// coeffs[i] is the coefficient of t^i; coeffs.back() must be 1.
    explicit ExtensionDescriptor(std::vector<Rat> coeffs);

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Rat>& min_poly() const { return coeffs_; }

    /// Text form of the minimal polynomial in the variable t,
    /// e.g. "t^2 - 2". Used by the `ext:` header line.
    std::string min_poly_text() const;

    bool same_as(const ExtensionDescriptor& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::vector<Rat> coeffs_;
};

using ExtensionHandle = std::shared_ptr<const ExtensionDescriptor>;

/// Irreducibility test over Q by trial factorization up to degree/2.
/// Exposed for tests and for the descriptor constructor.
bool univariate_irreducible_over_Q(const std::vector<Rat>& coeffs);

/// An element of Q or of a designated Q(alpha). Rational elements carry
/// no descriptor. Arithmetic between two distinct extensions is an
/// incompatibility error; plain rationals embed into any extension.
class FieldElement {
  public:
    FieldElement() : rat_(0) {}
    FieldElement(const Rat& q) : rat_(q) { rat_.canonicalize(); }
    FieldElement(long n) : rat_(n) {}
    FieldElement(const Int& n) : rat_(n) {}

    static FieldElement extension(std::vector<Rat> coords, ExtensionHandle ext);
    /// alpha itself in Q(alpha).
    static FieldElement generator(ExtensionHandle ext);

    bool is_rational() const { return ext_ == nullptr; }
    const Rat& rational() const;
    const std::vector<Rat>& coords() const { return coords_; }
    const ExtensionHandle& extension_handle() const { return ext_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;

    /// Canonical text: rationals as p/q; extension elements as a
    /// parenthesized polynomial in t, e.g. "(1/2 + 3*t)".
    std::string to_string() const;

    /// Strict total order for canonical sorting (not field order).
    static int compare(const FieldElement& a, const FieldElement& b);

  private:
    Rat rat_;
    std::vector<Rat> coords_;  // nonempty iff ext_ set; length = degree
    ExtensionHandle ext_;

    static void align(const FieldElement& a, const FieldElement& b,
                      std::vector<Rat>& av, std::vector<Rat>& bv, ExtensionHandle& ext);
};

/// phi: the fixed computable listing of Q.
/// phi(1) = 0, phi(2k) = w_k, phi(2k+1) = -w_k where w_1 = 1 and
/// w_{n+1} = 1/(2*floor(w_n) - w_n + 1) (the Calkin-Wilf walk).
Rat field_enumerate_rational(std::uint64_t index);

/// The inverse of phi as an exact integer (indices grow with the
/// continued-fraction length, so they can exceed any machine word).
Int rational_enumeration_index(const Rat& value);

/// Enumeration of a whole field: for Q this is phi; for Q(alpha) of
/// degree d the index is unranked into d coordinate indices by iterated
/// Cantor unpairing. Bijective and repeatable.
FieldElement field_enumerate(std::uint64_t index, const ExtensionHandle& ext = nullptr);

/// Sequential enumerator with cached Calkin-Wilf state, for dovetailed
/// point searches. next() returns phi(1), phi(2), ... in order.
class FieldEnumerator {
  public:
    Rat next();
    const std::vector<Rat>& prefix(std::size_t n);

  private:
    std::vector<Rat> cache_;
    Rat walk_ = 0;  // last positive walk value, 0 before the walk starts
};

}  // namespace ringbench::exactalg
