#pragma once

// Presentations of countable spaces and sheaves of function rings on
// them: descriptor algebra for opens, probe-based sheaf-axiom and
// Z-class checking, L_R morphism validity, stalk membership, restriction
// to subsets and direct images.

#include "ringbench/unions.hpp"

namespace ringbench::spaces {

using exactalg::FieldElement;
using exactalg::Fraction;
using exactalg::IdealPresentation;
using exactalg::SparsePolynomial;
using geometry::PointOnVariety;
using geometry::RationalFunction;
using geometry::VarietyHandle;
using geometry::VarietyPresentation;

enum class TopologyKind { cofinite, zariski, weak_union, explicit_finite };

/// An open set of a presented space. `whole` and `empty` are the two
/// degenerate descriptors every kind shares.
struct SpaceOpen {
    enum class Kind { whole, empty, cofinite, zariski, literal } kind = Kind::whole;
    std::vector<PointOnVariety> excluded;   // cofinite
    IdealPresentation complement_ideal;     // zariski
    std::vector<std::size_t> members;       // literal (indices into a finite carrier)

    static SpaceOpen whole();
    static SpaceOpen empty();
    static SpaceOpen cofinite(std::vector<PointOnVariety> excluded);
    static SpaceOpen zariski(IdealPresentation complement);
    static SpaceOpen literal(std::vector<std::size_t> members);

    std::string to_string() const;
    bool operator==(const SpaceOpen& o) const { return to_string() == o.to_string(); }
};

enum class OpenOp { intersect, unite };

/// Descriptor algebra. Mixing cofinite with zariski descriptors is an
/// incompatibility error; whole/empty combine with everything.
SpaceOpen open_ops(const SpaceOpen& a, const SpaceOpen& b, OpenOp op);

/// Point membership in an open descriptor.
bool open_member(const PointOnVariety& p, const SpaceOpen& u);

/// A sheaf of function rings presented by a rule. The restriction maps
/// are inclusions unless the presentation is deliberately corrupted.
class SheafPresentation {
  public:
    enum class Backing {
        regular_functions,  // rational functions regular on the open
        union_quotient,     // F_Y(U_Y) = F(U_Y)/I(Y) over a union structure
        everything,         // the whole fraction field on every open
        direct_image,       // (f_* F)(V) = F(f^-1 V)
    };

    enum class RestrictionRule { inclusion, corrupted };

    /// Zariski or cofinite sheaf of regular functions on a carrier.
    static SheafPresentation regular(VarietyHandle carrier, TopologyKind topology);
    static SheafPresentation union_quotient(std::shared_ptr<const unions::UnionStructure> y);
    static SheafPresentation everything(VarietyHandle carrier, TopologyKind topology);

    Backing backing() const { return backing_; }
    TopologyKind topology() const { return topology_; }
    const VarietyHandle& carrier() const { return carrier_; }
    RestrictionRule restriction_rule() const { return restriction_rule_; }

    /// Is f a section over u? F(empty) = {0} on sane presentations.
    bool section_member(const Fraction& f, const SpaceOpen& u) const;
    /// Is the class of f zero in F(u)? (For quotient sheaves this is
    /// membership of the numerator in I(Y).)
    bool section_is_zero(const Fraction& f, const SpaceOpen& u) const;

    // deliberate corruptions for negative testing
    SheafPresentation with_omitted(SpaceOpen u, Fraction f) const;
    SheafPresentation with_forced(SpaceOpen u, Fraction f) const;
    SheafPresentation with_nonzero_empty_ring() const;
    SheafPresentation with_restriction_rule(RestrictionRule rule) const;

    /// Point map for direct images.
    struct PointMap {
        enum class Kind { identity, constant, coordinate } kind = Kind::identity;
        PointOnVariety constant_target;
        std::vector<SparsePolynomial> images;
    };

    static SheafPresentation direct_image(std::shared_ptr<const SheafPresentation> source,
                                          PointMap map);
    /// Preimage descriptor under this sheaf's map (direct images only).
    SpaceOpen preimage(const SpaceOpen& v) const;

    /// Restriction to the subset carrier minus the listed points, with
    /// section rings the unions over enclosing opens. Idempotent.
    SheafPresentation restricted_to_complement_of(std::vector<PointOnVariety> removed) const;
    const std::vector<PointOnVariety>& removed_points() const { return removed_; }

  private:
    Backing backing_ = Backing::regular_functions;
    TopologyKind topology_ = TopologyKind::zariski;
    VarietyHandle carrier_;
    std::shared_ptr<const unions::UnionStructure> union_;
    std::shared_ptr<const SheafPresentation> source_;
    PointMap map_;
    RestrictionRule restriction_rule_ = RestrictionRule::inclusion;
    std::vector<std::pair<SpaceOpen, Fraction>> omitted_, forced_;
    bool nonzero_empty_ = false;
    std::vector<PointOnVariety> removed_;
};

struct SheafReport {
    bool pass = true;
    std::vector<std::string> failures;  // human-readable witnesses
};

/// Presheaf conditions on descriptors, the identity axiom and gluing on
/// the probe sections: a probe lying in every F(V_i) must lie in F(U),
/// and a probe of F(U) must restrict into every F(V_i). The cover must
/// cover U (descriptor-level check; violating it is a precondition
/// error, not a report entry).
SheafReport sheaf_axioms_check(const SheafPresentation& s, const SpaceOpen& u,
                               const std::vector<SpaceOpen>& cover,
                               const std::vector<Fraction>& probes);

/// Z-class conditions (4)-(6) on the sampled opens with a canonical
/// probe family: sections lie in the fraction field and are defined on
/// their opens, restrictions are inclusions, and the intersection law
/// holds on the sample.
SheafReport zclass_check(const SheafPresentation& s, const std::vector<SpaceOpen>& sample_opens,
                         const std::vector<Fraction>& probes);

struct LrProbe {
    std::vector<PointOnVariety> points;                  // source sample points
    std::vector<std::pair<SpaceOpen, SpaceOpen>> opens;  // (target open, claimed preimage)
    std::vector<Fraction> sections;                      // target sections to pull back
};

/// L_R morphism validity on probes: continuity (preimage agreement on
/// probe points), section maps are ring morphisms into the right rings,
/// and restriction squares commute. The default section map is
/// precomposition with the coordinate map.
bool lr_morphism_check(const SheafPresentation& src, const SheafPresentation& dst,
                       const std::vector<SparsePolynomial>& coordinate_map,
                       const LrProbe& probes,
                       const std::function<Fraction(const Fraction&)>& section_map = nullptr);

/// Is f regular at p: does the denominator ideal ((f2) + I(V) : f1) have
/// a generator nonvanishing at p?
bool stalk_member(const RationalFunction& f, const PointOnVariety& p);

/// A quantifier-free sentence of the structure language, in the line
/// protocol `PT <pt> IN <open>`, `SEC <fn> IN <open>`,
/// `ADD <open> <a> <b> <c>`, `MUL <open> <a> <b> <c>`,
/// `RES <openU> <openV> <a> <b>`. All ids are decimal.
struct LRSentence {
    enum class Shape { point_in_open, section_in_ring, add_atom, mul_atom, restriction_atom };
    Shape shape = Shape::point_in_open;
    std::uint64_t open_u = 0;  // the (first) open id
    std::uint64_t open_v = 0;  // second open id (restriction atoms)
    std::uint64_t a = 0, b = 0, c = 0;  // point or section ids

    std::string to_string() const;
    static LRSentence parse(const std::string& line);  // throws on malformed input
};

}  // namespace ringbench::spaces
