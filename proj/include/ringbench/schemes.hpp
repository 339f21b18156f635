#pragma once

// Spectra as presented ringed spaces: valuation-ring schemes over Q,
// the rings of rational functions with forbidden linear denominator
// factors, their integral closures in a function field K = k(x)[z]/(F),
// orders at linear primes, and the Z_X scheme encoders.

#include "ringbench/fraction.hpp"
#include "ringbench/oracle.hpp"

#include <memory>
#include <variant>

namespace ringbench::schemes {

using exactalg::ExtensionHandle;
using exactalg::FieldElement;
using exactalg::Fraction;
using exactalg::Int;
using exactalg::Rat;
using exactalg::SparsePolynomial;

/// Exponent of p in the nonzero rational q.
long padic_order(const Rat& q, const Int& p);

/// Forbidden linear factors per variable: the sets phi(I_j), each behind
/// a logged oracle over enumeration indices.
struct LocalizedRingDescriptor {
    unsigned nvars = 0;
    std::vector<harness::OracleHandle> forbidden;  // length nvars

    /// Is the field element a in phi(I_j)? One logged oracle query.
    bool value_forbidden(unsigned j, const Rat& a) const;
};

/// h in P_{I_1..I_n}: no linear factor (x_j - a) of h has a in phi(I_j).
bool P_member(const SparsePolynomial& h, const LocalizedRingDescriptor& descriptor);

/// g in R_{I_1..I_n}: no forbidden linear factor survives in the reduced
/// denominator (equivalently, ord of g at every forbidden linear prime
/// is nonnegative). Representation independent.
bool R_member(const Fraction& g, const LocalizedRingDescriptor& descriptor);

/// The function field K = k(x1..xn)[z]/(Q(z) - A(x)) with Q monic of
/// degree m. For m >= 2 the substitution-irreducibility certificate
/// requires n >= 2, A monic in every variable, and gcd(deg_j A, m) = 1.
class FunctionFieldDescriptor {
  public:
    FunctionFieldDescriptor(std::vector<Rat> q_coeffs, SparsePolynomial a_poly);

    unsigned degree() const { return static_cast<unsigned>(q_.size() - 1); }
    unsigned variable_count() const { return a_.variable_count(); }
    const std::vector<Rat>& q_coeffs() const { return q_; }
    const SparsePolynomial& a_poly() const { return a_; }

    /// Coefficients of F = Q(z) - A as polynomials in k[x], by z-degree.
    std::vector<SparsePolynomial> f_coeffs() const;

  private:
    std::vector<Rat> q_;
    SparsePolynomial a_;
};

using FunctionFieldHandle = std::shared_ptr<const FunctionFieldDescriptor>;

class FunctionFieldElement {
  public:
    FunctionFieldElement(std::vector<Fraction> coords, FunctionFieldHandle field);
    static FunctionFieldElement from_fraction(Fraction f, FunctionFieldHandle field);
    /// z itself.
    static FunctionFieldElement generator(FunctionFieldHandle field);

    const std::vector<Fraction>& coords() const { return coords_; }
    const FunctionFieldHandle& field() const { return field_; }
    bool is_zero() const;

    FunctionFieldElement operator+(const FunctionFieldElement& o) const;
    FunctionFieldElement operator-(const FunctionFieldElement& o) const;
    FunctionFieldElement operator*(const FunctionFieldElement& o) const;
    FunctionFieldElement scale(const Fraction& c) const;
    bool operator==(const FunctionFieldElement& o) const;

  private:
    std::vector<Fraction> coords_;  // power basis 1, z, ..., z^{m-1}
    FunctionFieldHandle field_;
};

/// Monic minimal polynomial of y over k(x), dense by degree (leading
/// coefficient 1 included). Its degree divides the field degree.
std::vector<Fraction> minpoly_in_K(const FunctionFieldElement& y);

/// Field norm N_{K/k(x)}(y), computed by a Sylvester resultant.
Fraction norm_K(const FunctionFieldElement& y);

/// The base ring for integrality tests.
struct PolynomialBase {};                              // k[x]
struct LocalizedBase { LocalizedRingDescriptor descriptor; };  // R_{I_1..I_n}
struct LinearLocalBase { unsigned j; Rat a; };         // R_{a,j}
using IntegralBase = std::variant<PolynomialBase, LocalizedBase, LinearLocalBase>;

/// Every non-leading minimal-polynomial coefficient lies in the base.
bool integral_member(const FunctionFieldElement& y, const IntegralBase& base);

/// The unique r with y/(x_j - a)^r integral over k[x] but not one step
/// further; y must be nonzero and integral.
unsigned order_at_linear_prime(const FunctionFieldElement& y, unsigned j, const Rat& a);

struct SchemePrime {
    enum class Kind { zero, integer, linear } kind = Kind::zero;
    Int p;       // integer kind
    unsigned j = 0;  // linear kind, 0-based variable
    Rat a;

    static SchemePrime zero();
    static SchemePrime integer(Int p);
    static SchemePrime linear(unsigned j, Rat a);
    std::string to_string() const;  // "PRIME zero" / "PRIME int 7" / "PRIME lin 1 1/2"
    static SchemePrime parse(const std::string& line);
};

/// A presented spectrum: the zero ideal plus either integer primes with
/// the odd/even split over a membership oracle, or the linear primes
/// (x_j - a) for a in phi(I_j).
class SpecPresentation {
  public:
    enum class Flavor { integer_valuations, linear_primes };

    static SpecPresentation integer_valuations(harness::OracleHandle x);
    static SpecPresentation linear_primes(LocalizedRingDescriptor descriptor);

    Flavor flavor() const { return flavor_; }
    const harness::OracleHandle& oracle() const { return oracle_; }
    const LocalizedRingDescriptor& descriptor() const { return descriptor_; }

    /// Deterministic enumeration: the zero ideal first, then the primes.
    std::optional<SchemePrime> prime_at(std::uint64_t idx) const;

    /// Membership of a prime in the spectrum (logged oracle queries).
    bool contains(const SchemePrime& p) const;

    /// Global-section membership: every prime of the spectrum must see
    /// nonnegative order. Finite check against the denominator.
    bool section_member(const Rat& f) const;       // integer flavor
    bool section_member(const Fraction& f) const;  // linear flavor

  private:
    Flavor flavor_ = Flavor::integer_valuations;
    harness::OracleHandle oracle_;
    LocalizedRingDescriptor descriptor_;
};

/// Does f belong to the ring of global sections of the integer-flavor
/// Z_X? Reduces to finitely many order checks against the denominator.
bool valuation_scheme_member(const Rat& f, const SpecPresentation& zx);

/// The k-th rational prime is included iff k is even, or k = 2n+1 with
/// n in X (integer flavor); the linear flavor encodes X the same way on
/// enumeration indices of the single variable layer.
SpecPresentation build_ZX_scheme(harness::OracleHandle x, SpecPresentation::Flavor flavor);

/// Prop-style prime enumeration for a descriptor.
SpecPresentation spec_points(LocalizedRingDescriptor descriptor);

/// Under the exactly-one precondition, decide which of i, j has its
/// designated prime in the copy, by two membership probes.
unsigned scheme_decide_pair(const SpecPresentation& copy, unsigned i, unsigned j);

/// The designated prime e(n) encoding index n (integer flavor: the
/// (2n+1)-st rational prime; linear flavor: x_1 - phi(2n+1)).
SchemePrime encoding_prime(SpecPresentation::Flavor flavor, unsigned n);

}  // namespace ringbench::schemes
