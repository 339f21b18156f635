#pragma once

// Union ringed subspaces of a fixed space and unions of disjoint ringed
// spaces: the A_X builder, weak-topology and section-membership checks,
// morphism verification, and the pairwise decision and enumeration
// procedures the framework theorems hypothesize.

#include "ringbench/curves.hpp"
#include "ringbench/geometry.hpp"
#include "ringbench/oracle.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace ringbench::unions {

using exactalg::FieldElement;
using exactalg::Fraction;
using exactalg::IdealPresentation;
using exactalg::SparsePolynomial;
using geometry::PointOnVariety;
using geometry::VarietyPresentation;

enum class RigidityKind { distinct_j_invariant, distinct_genus, distinct_bad_primes };
enum class UnionMode { subspaces_of_fixed_z, disjoint_spaces };

/// A computable family of components: deterministic builder, per-point
/// classifier chi, a point stream per component (nullopt-terminated, and
/// once null always null), and the invariant backing its rigidity
/// certificate. Components are infinite varieties over the closure;
/// pairwise disjointness is part of the construction.
struct ComponentFamily {
    std::string name;
    unsigned ambient_dimension = 0;
    UnionMode natural_mode = UnionMode::subspaces_of_fixed_z;
    RigidityKind rigidity = RigidityKind::distinct_j_invariant;
    std::function<VarietyPresentation(unsigned)> builder;  // 1-based index
    std::function<std::optional<PointOnVariety>(unsigned, std::uint64_t)> point_gen;
    std::function<std::optional<unsigned>(const PointOnVariety&)> chi;
    std::function<std::string(unsigned)> invariant;  // exact text, pairwise distinct
    std::optional<VarietyPresentation> ambient;      // the fixed Z (subspaces mode)
    unsigned max_index = 0;                          // 0 = unbounded
    // components are the fibers {x_{fiber_variable+1} = value}; the maps
    // between fiber values and indices drive chi and section membership
    unsigned fiber_variable = 0;
    std::function<std::optional<unsigned>(const exactalg::Rat&)> index_of_fiber_value;
    std::function<exactalg::Rat(unsigned)> fiber_value;
};

/// The fibers {y^2 = x^3 + x + n, z = n} of the elliptic surface
/// y^2 = x^3 + x + z, classified by the z coordinate (subspaces mode).
ComponentFamily elliptic_fiber_family();

/// The disjoint curves y^2 = x^3 + n x + 1 tagged by n (disjoint mode).
ComponentFamily disjoint_elliptic_family();

/// The curves {y^{2n+1} = (x+1)(x+2), z = n} with strictly growing genus.
ComponentFamily superelliptic_family();

/// The non-isogenous curves y^2 = x^3 + A_i x + 1 from the congruence
/// search, with bad-prime witnesses as the invariant (disjoint mode).
ComponentFamily appendix_family(const curves::AppendixFamilyState& state);

/// An ambient open of Z: the whole space, a co-finite set given by its
/// excluded points, or a Zariski open given by its complement ideal.
struct ZOpen {
    enum class Kind { whole, cofinite, zariski } kind = Kind::whole;
    std::vector<PointOnVariety> excluded;
    IdealPresentation complement_ideal;

    static ZOpen whole();
    static ZOpen cofinite(std::vector<PointOnVariety> excluded);
    static ZOpen zariski(IdealPresentation complement);
};

/// A weak open of a disjoint union: full on every component except the
/// many listed, which carry a proper (nonempty) relative open.
struct WeakOpen {
    ZOpen ambient;                                          // subspaces-mode descriptor
    std::vector<std::pair<unsigned, ZOpen>> exceptions;     // disjoint-mode exceptions
};

/// Sections of a disjoint union: a constant value off finitely many
/// with per-component rational-function exceptions.
struct TupleSection {
    FieldElement constant_c;
    std::vector<std::pair<unsigned, Fraction>> exceptions;  // ascending indices
};

class UnionStructure {
  public:
    UnionStructure(ComponentFamily family, harness::OracleHandle oracle, UnionMode mode);

    const ComponentFamily& family() const { return family_; }
    const harness::OracleHandle& oracle() const { return oracle_; }
    UnionMode mode() const { return mode_; }
    bool index_set_infinite() const { return !oracle_->is_finite(); }

    /// idx-th point of the dovetailed enumeration over included
    /// components; nullopt once the whole structure is exhausted.
    std::optional<PointOnVariety> point_at(std::uint64_t idx) const;

    /// I(Y) in the ambient coordinates: the zero ideal of k[V] when the
    /// index set is flagged infinite, the intersection of the component
    /// ideals otherwise. Computed lazily.
    const IdealPresentation& ideal_of_y() const;

    /// Oracle queries spent so far (including point enumeration).
    std::size_t query_count() const { return oracle_->query_count(); }

  private:
    ComponentFamily family_;
    harness::OracleHandle oracle_;
    harness::CachedOracle cache_;
    UnionMode mode_;
    mutable std::vector<PointOnVariety> points_;
    mutable std::uint64_t next_diagonal_ = 2;
    mutable std::map<unsigned, std::uint64_t> exhausted_at_;  // component -> first null j
    mutable std::optional<IdealPresentation> iy_;
    mutable std::unique_ptr<std::mutex> lock_ = std::make_unique<std::mutex>();

    bool extend_points() const;  // one diagonal; false when nothing can come
};

/// Build A_X (the union over the oracle's index set). All later diagram
/// answers go through finitely many logged oracle queries.
UnionStructure build_AX(ComponentFamily family, harness::OracleHandle oracle, UnionMode mode);

/// Does the weak open meet every probed included component (subspaces
/// mode), resp. carry finitely many nonempty exceptions (disjoint mode)?
bool weak_open_check(const WeakOpen& u, const UnionStructure& structure,
                     const std::vector<unsigned>& probe_components);

/// Membership of [f] in F_Y(U_Y) over a fixed space: definedness of the
/// representative on the ambient open, with the denominator reduced
/// against I(Y).
bool union_section_member(const Fraction& f, const WeakOpen& u, const UnionStructure& structure);

/// Membership of a tuple section: every exception is defined on its
/// component's part of the open.
bool union_section_member(const TupleSection& s, const WeakOpen& u,
                          const UnionStructure& structure);

struct MorphismProbe {
    std::vector<PointOnVariety> points;                         // sample source points
    std::vector<Fraction> sections;                             // sample target sections
    std::optional<std::vector<SparsePolynomial>> coordinate_map;  // ambient images
};

/// Componentwise routing, landing inside the target structure, and the
/// composition-morphism conditions, all verified on the probes.
bool union_morphism_check(const UnionStructure& src, const UnionStructure& dst,
                          const std::function<PointOnVariety(const PointOnVariety&)>& point_map,
                          const MorphismProbe& probes);

using PointSource = std::function<std::optional<PointOnVariety>(std::uint64_t)>;

/// Under the exactly-one-embeds precondition, return whichever of i, j
/// has a point in the copy. Diverges only if the precondition fails on an
/// infinite stream; a finite stream that exhausts first throws.
unsigned decide_pair(const PointSource& copy, unsigned i, unsigned j,
                     const ComponentFamily& family);

/// The deduplicated chi image of the first `budget` point slots,
/// ascending. Equals X on faithful copies scanned far enough.
std::set<unsigned> enumerate_components(const PointSource& copy, const ComponentFamily& family,
                                        std::uint64_t budget);

struct RigidityReport {
    bool pass = true;
    RigidityKind kind;
    std::string detail;
    std::optional<std::pair<unsigned, unsigned>> collision;
};

/// Pairwise distinctness of the family's declared invariant on 1..prefix.
RigidityReport rigidity_certify(const ComponentFamily& family, unsigned prefix);

/// The conjugation-closed vanishing ideal of a point over Q (quadratic
/// coordinates contribute x_s^2 - v).
IdealPresentation point_vanishing_ideal(const PointOnVariety& p, unsigned nvars);

}  // namespace ringbench::unions
