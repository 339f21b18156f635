#pragma once

// Varieties as presented objects, rational functions on them, and the
// decision procedures for definedness, vanishing and constancy, plus
// dovetailed point enumeration and ideals of unions.

#include "ringbench/fraction.hpp"

#include <memory>
#include <optional>
#include <variant>

namespace ringbench::geometry {

using exactalg::FieldElement;
using exactalg::Fraction;
using exactalg::IdealPresentation;
using exactalg::SparsePolynomial;

using exactalg::linear_factors_in_variable;

enum class IrreducibilityCertificate { none, trusted_metadata, single_linear_fiber };

class VarietyPresentation {
  public:
    /// Rejects the unit ideal (the empty variety is not a presentation).
    VarietyPresentation(unsigned ambient_dimension, IdealPresentation defining_ideal,
                        IrreducibilityCertificate cert = IrreducibilityCertificate::none);

    unsigned ambient_dimension() const { return ambient_; }
    const IdealPresentation& defining_ideal() const { return ideal_; }
    IrreducibilityCertificate certificate() const { return cert_; }

    /// Whole affine space of the given dimension.
    static VarietyPresentation affine_space(unsigned n);

  private:
    unsigned ambient_;
    IdealPresentation ideal_;
    IrreducibilityCertificate cert_;
};

using VarietyHandle = std::shared_ptr<const VarietyPresentation>;

struct PointOnVariety {
    std::vector<FieldElement> coords;
};

/// Checks that every generator vanishes at the coordinates.
PointOnVariety make_point(const VarietyPresentation& v, std::vector<FieldElement> coords);

class RationalFunction {
  public:
    /// Denominator must not lie in the defining ideal.
    RationalFunction(Fraction value, VarietyHandle home);
    RationalFunction(SparsePolynomial num, SparsePolynomial den, VarietyHandle home);

    const Fraction& value() const { return value_; }
    const SparsePolynomial& numerator() const { return value_.num(); }
    const SparsePolynomial& denominator() const { return value_.den(); }
    const VarietyHandle& home() const { return home_; }

  private:
    Fraction value_;
    VarietyHandle home_;
};

/// Deterministic dovetailed search over field-enumeration tuples; returns
/// all points found while testing `budget` candidate tuples. Monotone in
/// the budget.
std::vector<PointOnVariety> variety_points_enumerate(const VarietyPresentation& v,
                                                     std::size_t budget);

/// Is f defined on the open U whose complement (inside the home variety)
/// is presented by complement_ideal? Runs the sufficient division test
/// first, then the exact radical-membership criterion.
bool fn_defined_on_open(const RationalFunction& f, const IdealPresentation& complement_ideal);

/// The division-only sufficient test (exposed for the soundness property).
bool fn_defined_division_test(const RationalFunction& f,
                              const IdealPresentation& complement_ideal);

/// Thrown when a function's denominator vanishes identically on the
/// closed set it is being asked about.
class NowhereDefinedError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Is f identically zero on the closed set W = V(closed_ideal) within the
/// home variety (over the algebraic closure)?
bool fn_vanishes_on_closed(const RationalFunction& f, const IdealPresentation& closed_ideal);

struct ConstancyResult {
    enum class Kind { constant, nonconstant, inconclusive } kind;
    std::optional<FieldElement> value;  // set when constant
};

ConstancyResult fn_is_constant(const RationalFunction& f, std::size_t search_budget);

/// Ideal of a union of pairwise disjoint subvarieties of a common ambient
/// variety. With the cofinite flag set the union is infinite and the
/// answer is the ambient ideal itself; the empty finite union gives the
/// unit ideal.
IdealPresentation ideal_of_union(const std::vector<VarietyPresentation>& components,
                                 bool cofinite_flag,
                                 const VarietyPresentation* ambient = nullptr);

}  // namespace ringbench::geometry
