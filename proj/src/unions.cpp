#include "ringbench/unions.hpp"

#include <algorithm>
#include <sstream>

namespace ringbench::unions {

using namespace exactalg;
using geometry::IrreducibilityCertificate;
using geometry::RationalFunction;

namespace {

// y^2 = x^3 + c3*x + c1*z*x + c0 + z family plumbing: fibers of the two
// elliptic surfaces used throughout are special cases of these builders.

SparsePolynomial surface_xz(unsigned which) {
    // which 0: y^2 - x^3 - x - z   (fibers y^2 = x^3 + x + n)
    // which 1: y^2 - x^3 - z*x - 1 (fibers y^2 = x^3 + n x + 1)
    SparsePolynomial x = SparsePolynomial::variable(3, 0);
    SparsePolynomial y = SparsePolynomial::variable(3, 1);
    SparsePolynomial z = SparsePolynomial::variable(3, 2);
    SparsePolynomial one = SparsePolynomial::constant(3, FieldElement(1));
    if (which == 0) return y * y - x * x * x - x - z;
    return y * y - x * x * x - z * x - one;
}

VarietyPresentation fiber_of(unsigned which, const Rat& value) {
    SparsePolynomial z = SparsePolynomial::variable(3, 2);
    SparsePolynomial eq = surface_xz(which).substitute_variable(2, FieldElement(value));
    std::vector<SparsePolynomial> gens{eq, z - SparsePolynomial::constant(3, FieldElement(value))};
    return VarietyPresentation(3, IdealPresentation(3, std::move(gens)),
                               IrreducibilityCertificate::single_linear_fiber);
}

std::optional<PointOnVariety> elliptic_fiber_point(unsigned which, const Rat& value,
                                                   std::uint64_t j) {
    Rat x = field_enumerate_rational(j + 1);
    Rat v = which == 0 ? Rat(x * x * x + x + value) : Rat(x * x * x + value * x + 1);
    FieldElement y = curves::sqrt_element(v);
    return PointOnVariety{{FieldElement(x), y, FieldElement(value)}};
}

std::optional<unsigned> positive_integer_index(const Rat& v) {
    if (v.get_den() != 1 || v <= 0) return std::nullopt;
    Int n = v.get_num();
    if (!n.fits_uint_p()) return std::nullopt;
    return static_cast<unsigned>(n.get_ui());
}

std::optional<unsigned> chi_by_fiber(const ComponentFamily& fam, const PointOnVariety& p) {
    if (p.coords.size() <= fam.fiber_variable) return std::nullopt;
    const FieldElement& c = p.coords[fam.fiber_variable];
    if (!c.is_rational()) return std::nullopt;
    return fam.index_of_fiber_value(c.rational());
}

}  // namespace

ComponentFamily elliptic_fiber_family() {
    ComponentFamily fam;
    fam.name = "elliptic-fibers";
    fam.ambient_dimension = 3;
    fam.natural_mode = UnionMode::subspaces_of_fixed_z;
    fam.rigidity = RigidityKind::distinct_j_invariant;
    fam.fiber_variable = 2;
    fam.ambient = VarietyPresentation(3, IdealPresentation(3, {surface_xz(0)}),
                                      IrreducibilityCertificate::trusted_metadata);
    fam.builder = [](unsigned i) { return fiber_of(0, Rat((long)i)); };
    fam.point_gen = [](unsigned i, std::uint64_t j) {
        return elliptic_fiber_point(0, Rat((long)i), j);
    };
    fam.fiber_value = [](unsigned i) { return Rat((long)i); };
    fam.index_of_fiber_value = positive_integer_index;
    fam.chi = [fam](const PointOnVariety& p) { return chi_by_fiber(fam, p); };
    fam.invariant = [](unsigned i) {
        auto inv = curves::weierstrass_invariants(FieldElement(1), FieldElement((long)i));
        return inv.j->to_string();
    };
    return fam;
}

ComponentFamily disjoint_elliptic_family() {
    ComponentFamily fam;
    fam.name = "disjoint-elliptic";
    fam.ambient_dimension = 3;
    fam.natural_mode = UnionMode::disjoint_spaces;
    fam.rigidity = RigidityKind::distinct_j_invariant;
    fam.fiber_variable = 2;
    fam.ambient = VarietyPresentation(3, IdealPresentation(3, {surface_xz(1)}),
                                      IrreducibilityCertificate::trusted_metadata);
    fam.builder = [](unsigned i) { return fiber_of(1, Rat((long)i)); };
    fam.point_gen = [](unsigned i, std::uint64_t j) {
        return elliptic_fiber_point(1, Rat((long)i), j);
    };
    fam.fiber_value = [](unsigned i) { return Rat((long)i); };
    fam.index_of_fiber_value = positive_integer_index;
    fam.chi = [fam](const PointOnVariety& p) { return chi_by_fiber(fam, p); };
    fam.invariant = [](unsigned i) {
        auto inv = curves::weierstrass_invariants(FieldElement((long)i), FieldElement(1));
        return inv.j->to_string();
    };
    return fam;
}

ComponentFamily superelliptic_family() {
    ComponentFamily fam;
    fam.name = "superelliptic";
    fam.ambient_dimension = 3;
    fam.natural_mode = UnionMode::subspaces_of_fixed_z;
    fam.rigidity = RigidityKind::distinct_genus;
    fam.fiber_variable = 2;
    fam.ambient = VarietyPresentation::affine_space(3);
    fam.builder = [](unsigned i) {
        unsigned d = 2 * i + 1;
        SparsePolynomial x = SparsePolynomial::variable(3, 0);
        SparsePolynomial y = SparsePolynomial::variable(3, 1);
        SparsePolynomial z = SparsePolynomial::variable(3, 2);
        SparsePolynomial one = SparsePolynomial::constant(3, FieldElement(1));
        SparsePolynomial two = SparsePolynomial::constant(3, FieldElement(2));
        SparsePolynomial yd = one;
        for (unsigned k = 0; k < d; ++k) yd = yd * y;
        std::vector<SparsePolynomial> gens{
            yd - (x + one) * (x + two),
            z - SparsePolynomial::constant(3, FieldElement((long)i))};
        return VarietyPresentation(3, IdealPresentation(3, std::move(gens)),
                                   IrreducibilityCertificate::single_linear_fiber);
    };
    fam.point_gen = [](unsigned i, std::uint64_t j) -> std::optional<PointOnVariety> {
        // the rational points (-1, 0, i) and (-2, 0, i)
        if (j == 0)
            return PointOnVariety{{FieldElement(-1), FieldElement(0), FieldElement((long)i)}};
        if (j == 1)
            return PointOnVariety{{FieldElement(-2), FieldElement(0), FieldElement((long)i)}};
        return std::nullopt;
    };
    fam.fiber_value = [](unsigned i) { return Rat((long)i); };
    fam.index_of_fiber_value = positive_integer_index;
    fam.chi = [fam](const PointOnVariety& p) { return chi_by_fiber(fam, p); };
    fam.invariant = [](unsigned i) {
        return std::to_string(curves::superelliptic_genus(2 * i + 1));
    };
    return fam;
}

ComponentFamily appendix_family(const curves::AppendixFamilyState& state) {
    ComponentFamily fam;
    fam.name = "appendix-nonisogenous";
    fam.ambient_dimension = 3;
    fam.natural_mode = UnionMode::disjoint_spaces;
    fam.rigidity = RigidityKind::distinct_bad_primes;
    fam.fiber_variable = 2;
    fam.max_index = static_cast<unsigned>(state.curves.size());
    fam.ambient = VarietyPresentation(3, IdealPresentation(3, {surface_xz(1)}),
                                      IrreducibilityCertificate::trusted_metadata);
    std::vector<Int> avalues, witnesses;
    for (const auto& c : state.curves) {
        avalues.push_back(c.a_value);
        witnesses.push_back(c.witness_prime);
    }
    fam.builder = [avalues](unsigned i) {
        if (i == 0 || i > avalues.size()) throw std::domain_error("component index out of range");
        return fiber_of(1, Rat(avalues[i - 1]));
    };
    fam.point_gen = [avalues](unsigned i, std::uint64_t j) -> std::optional<PointOnVariety> {
        if (i == 0 || i > avalues.size()) return std::nullopt;
        return elliptic_fiber_point(1, Rat(avalues[i - 1]), j);
    };
    fam.fiber_value = [avalues](unsigned i) { return Rat(avalues[i - 1]); };
    fam.index_of_fiber_value = [avalues](const Rat& v) -> std::optional<unsigned> {
        for (std::size_t k = 0; k < avalues.size(); ++k)
            if (v == Rat(avalues[k])) return static_cast<unsigned>(k + 1);
        return std::nullopt;
    };
    fam.chi = [fam](const PointOnVariety& p) { return chi_by_fiber(fam, p); };
    fam.invariant = [witnesses](unsigned i) { return witnesses[i - 1].get_str(); };
    return fam;
}

ZOpen ZOpen::whole() { return ZOpen{}; }

ZOpen ZOpen::cofinite(std::vector<PointOnVariety> excluded) {
    ZOpen u;
    u.kind = Kind::cofinite;
    u.excluded = std::move(excluded);
    return u;
}

ZOpen ZOpen::zariski(IdealPresentation complement) {
    ZOpen u;
    u.kind = Kind::zariski;
    u.complement_ideal = std::move(complement);
    return u;
}

IdealPresentation point_vanishing_ideal(const PointOnVariety& p, unsigned nvars) {
    if (p.coords.size() != nvars) throw std::domain_error("point arity mismatch");
    // fully rational points need no elimination
    bool rational = std::all_of(p.coords.begin(), p.coords.end(),
                                [](const FieldElement& c) { return c.is_rational(); });
    if (rational) {
        std::vector<SparsePolynomial> gens;
        for (unsigned j = 0; j < nvars; ++j)
            gens.push_back(linear_prime(nvars, j, p.coords[j]));
        return IdealPresentation(nvars, std::move(gens));
    }
    // one extension descriptor per point: present the conjugate orbit by
    // eliminating t from { minpoly(t), x_j - coord_j(t) }
    ExtensionHandle ext;
    for (const FieldElement& c : p.coords)
        if (!c.is_rational()) { ext = c.extension_handle(); break; }
    unsigned d = ext->degree();
    // ring k[t, x1..xn] under lex, t first
    auto tpoly = [&](unsigned power) {
        Exponents e(nvars + 1, 0);
        e[0] = power;
        return SparsePolynomial::from_terms(nvars + 1, {{e, FieldElement(1)}},
                                            MonomialOrder::lex);
    };
    std::vector<SparsePolynomial> gens;
    {
        SparsePolynomial m(nvars + 1, MonomialOrder::lex);
        const auto& cs = ext->min_poly();
        for (unsigned k = 0; k < cs.size(); ++k)
            m = m + tpoly(k) * FieldElement(cs[k]);
        gens.push_back(m);
    }
    for (unsigned j = 0; j < nvars; ++j) {
        SparsePolynomial expr(nvars + 1, MonomialOrder::lex);
        if (p.coords[j].is_rational()) {
            expr = SparsePolynomial::constant(nvars + 1, p.coords[j], MonomialOrder::lex);
        } else {
            const auto& coords = p.coords[j].coords();
            for (unsigned k = 0; k < coords.size(); ++k)
                expr = expr + tpoly(k) * FieldElement(coords[k]);
        }
        gens.push_back(SparsePolynomial::variable(nvars + 1, j + 1, MonomialOrder::lex) - expr);
    }
    IdealPresentation extended(nvars + 1, std::move(gens), MonomialOrder::lex);
    std::vector<SparsePolynomial> kept;
    for (const SparsePolynomial& g : extended.groebner())
        if (!g.depends_on(0))
            kept.push_back(g.dropped_variable(0).with_order(MonomialOrder::grevlex));
    return IdealPresentation(nvars, std::move(kept));
}

namespace {

// complement ideal of an ambient open descriptor; V(result) = U^c
IdealPresentation open_complement_ideal(const ZOpen& u, unsigned nvars) {
    switch (u.kind) {
        case ZOpen::Kind::whole:
            return IdealPresentation(nvars,
                                     {SparsePolynomial::constant(nvars, FieldElement(1))});
        case ZOpen::Kind::zariski:
            return u.complement_ideal;
        case ZOpen::Kind::cofinite: {
            if (u.excluded.empty())
                return IdealPresentation(nvars,
                                         {SparsePolynomial::constant(nvars, FieldElement(1))});
            IdealPresentation acc = point_vanishing_ideal(u.excluded[0], nvars);
            for (std::size_t k = 1; k < u.excluded.size(); ++k)
                acc = ideal_intersect(acc, point_vanishing_ideal(u.excluded[k], nvars));
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

// does the open meet the (infinite, irreducible) component?
bool open_meets_component(const ZOpen& u, const VarietyPresentation& comp) {
    switch (u.kind) {
        case ZOpen::Kind::whole:
            return true;
        case ZOpen::Kind::cofinite:
            return true;  // finitely many points cannot cover an infinite component
        case ZOpen::Kind::zariski: {
            if (u.complement_ideal.generators().empty()) return false;  // empty open
            for (const SparsePolynomial& g : u.complement_ideal.generators())
                if (!radical_member(g, comp.defining_ideal())) return true;
            return false;  // component inside the complement
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

UnionStructure::UnionStructure(ComponentFamily family, harness::OracleHandle oracle,
                               UnionMode mode)
    : family_(std::move(family)), oracle_(std::move(oracle)), cache_(oracle_), mode_(mode) {
    if (!family_.builder || !family_.point_gen || !family_.chi)
        throw std::domain_error("component family is incomplete");
}

bool UnionStructure::extend_points() const {
    std::uint64_t d = next_diagonal_++;
    bool finite = oracle_->is_finite();
    bool all_exhausted = finite;
    if (finite) {
        for (std::uint64_t i : oracle_->finite_members()) {
            if (family_.max_index && i > family_.max_index) continue;
            if (!exhausted_at_.count(static_cast<unsigned>(i))) { all_exhausted = false; break; }
        }
        if (all_exhausted) return false;
    }
    for (std::uint64_t i = 1; i < d; ++i) {
        std::uint64_t j = d - 1 - i;
        if (family_.max_index && i > family_.max_index) continue;
        unsigned ci = static_cast<unsigned>(i);
        auto ex = exhausted_at_.find(ci);
        if (ex != exhausted_at_.end() && j >= ex->second) continue;
        if (!cache_.member(i)) continue;
        auto p = family_.point_gen(ci, j);
        if (!p) {
            if (ex == exhausted_at_.end()) exhausted_at_[ci] = j;
            continue;
        }
        points_.push_back(std::move(*p));
    }
    return true;
}

std::optional<PointOnVariety> UnionStructure::point_at(std::uint64_t idx) const {
    std::lock_guard<std::mutex> hold(*lock_);
    while (points_.size() <= idx) {
        if (!extend_points()) return std::nullopt;
    }
    return points_[idx];
}

const IdealPresentation& UnionStructure::ideal_of_y() const {
    std::lock_guard<std::mutex> hold(*lock_);
    if (iy_) return *iy_;
    unsigned n = family_.ambient_dimension;
    if (!oracle_->is_finite()) {
        // Noetherian argument: a nonzero function cannot vanish on
        // infinitely many disjoint components
        iy_ = family_.ambient ? family_.ambient->defining_ideal() : IdealPresentation(n, {});
        return *iy_;
    }
    std::vector<VarietyPresentation> comps;
    for (std::uint64_t i : oracle_->finite_members()) {
        if (family_.max_index && i > family_.max_index) continue;
        comps.push_back(family_.builder(static_cast<unsigned>(i)));
    }
    iy_ = geometry::ideal_of_union(comps, false,
                                   family_.ambient ? &*family_.ambient : nullptr);
    return *iy_;
}

UnionStructure build_AX(ComponentFamily family, harness::OracleHandle oracle, UnionMode mode) {
    return UnionStructure(std::move(family), std::move(oracle), mode);
}

bool weak_open_check(const WeakOpen& u, const UnionStructure& structure,
                     const std::vector<unsigned>& probe_components) {
    const ComponentFamily& fam = structure.family();
    if (structure.mode() == UnionMode::subspaces_of_fixed_z) {
        for (unsigned i : probe_components) {
            if (!structure.oracle()->member(i)) continue;  // not included, no constraint
            if (!open_meets_component(u.ambient, fam.builder(i))) return false;
        }
        return true;
    }
    // disjoint mode: full on all but the listed exceptions, each nonempty
    for (const auto& [i, rel] : u.exceptions) {
        if (!open_meets_component(rel, fam.builder(i))) return false;
    }
    if (u.ambient.kind != ZOpen::Kind::whole) {
        for (unsigned i : probe_components) {
            if (!structure.oracle()->member(i)) continue;
            if (!open_meets_component(u.ambient, fam.builder(i))) return false;
        }
    }
    return true;
}

namespace {

// does the blocking locus of the denominator meet component i inside U?
bool denominator_blocks_component(const Fraction& f, const IdealPresentation& complement,
                                  const VarietyPresentation& comp) {
    try {
        RationalFunction rf(f.num(), f.den(), std::make_shared<VarietyPresentation>(comp));
        return !fn_defined_on_open(rf, complement);
    } catch (const std::domain_error&) {
        return true;  // denominator vanishes identically on the component
    }
}

IdealPresentation saturate(IdealPresentation base, const IdealPresentation& by) {
    for (const SparsePolynomial& g : by.generators()) {
        while (true) {
            IdealPresentation next = ideal_quotient(base, g);
            if (next.groebner() == base.groebner()) break;
            base = std::move(next);
        }
    }
    return base;
}

}  // namespace

bool union_section_member(const Fraction& f, const WeakOpen& u,
                          const UnionStructure& structure) {
    const ComponentFamily& fam = structure.family();
    unsigned n = fam.ambient_dimension;
    IdealPresentation complement = open_complement_ideal(u.ambient, n);

    if (structure.oracle()->is_finite()) {
        for (std::uint64_t i : structure.oracle()->finite_members()) {
            if (fam.max_index && i > fam.max_index) continue;
            if (denominator_blocks_component(f, complement,
                                             fam.builder(static_cast<unsigned>(i))))
                return false;
        }
        return true;
    }

    // infinite index set: locate the components the denominator can block
    const IdealPresentation& ambient_ideal =
        fam.ambient ? fam.ambient->defining_ideal() : IdealPresentation(n, {});
    IdealPresentation locus = ideal_sum(ambient_ideal, f.den());
    if (locus.contains_one()) return true;
    IdealPresentation blocking = saturate(locus, complement);
    if (blocking.contains_one()) return true;  // zeros all inside the complement

    // project the blocking locus to the fiber variable
    unsigned fv = fam.fiber_variable;
    std::vector<SparsePolynomial> lexgens;
    for (const SparsePolynomial& g : blocking.generators()) {
        // move the fiber variable last: swap coordinates fv <-> n-1
        std::vector<SparsePolynomial> images;
        for (unsigned j = 0; j < n; ++j) {
            unsigned target = j == fv ? n - 1 : (j == n - 1 ? fv : j);
            images.push_back(SparsePolynomial::variable(n, target, MonomialOrder::lex));
        }
        lexgens.push_back(g.substitute(images).with_order(MonomialOrder::lex));
    }
    IdealPresentation swapped(n, std::move(lexgens), MonomialOrder::lex);
    std::vector<SparsePolynomial> projection;
    for (const SparsePolynomial& g : swapped.groebner()) {
        bool only_fiber = true;
        for (unsigned j = 0; j + 1 < n; ++j)
            if (g.depends_on(j)) { only_fiber = false; break; }
        if (only_fiber) projection.push_back(g);
    }
    if (projection.empty()) return false;  // blocks cofinitely many fibers

    // candidate fiber values are the rational roots of the projection
    SparsePolynomial uni(1);
    for (const SparsePolynomial& g : projection) {
        std::vector<Term> terms;
        for (const Term& t : g.terms()) terms.push_back({{t.mono[n - 1]}, t.coeff});
        SparsePolynomial h = SparsePolynomial::from_terms(1, std::move(terms));
        uni = uni.is_zero() ? h : h;  // a single generator suffices for candidates
        break;
    }
    for (const Rat& c : univariate_rational_roots(uni)) {
        auto idx = fam.index_of_fiber_value(c);
        if (!idx) continue;  // no component sits over this value
        if (!structure.oracle()->member(*idx)) continue;
        if (denominator_blocks_component(f, complement, fam.builder(*idx))) return false;
    }
    return true;
}

bool union_section_member(const TupleSection& s, const WeakOpen& u,
                          const UnionStructure& structure) {
    const ComponentFamily& fam = structure.family();
    unsigned n = fam.ambient_dimension;
    for (const auto& [i, frac] : s.exceptions) {
        // the open on component i: the listed exception if any, else the ambient
        ZOpen rel = u.ambient;
        for (const auto& [k, o] : u.exceptions)
            if (k == i) rel = o;
        IdealPresentation complement = open_complement_ideal(rel, n);
        if (denominator_blocks_component(frac, complement, fam.builder(i))) return false;
    }
    return true;
}

bool union_morphism_check(const UnionStructure& src, const UnionStructure& dst,
                          const std::function<PointOnVariety(const PointOnVariety&)>& point_map,
                          const MorphismProbe& probes) {
    const ComponentFamily& sf = src.family();
    const ComponentFamily& df = dst.family();
    std::map<unsigned, unsigned> routing;  // source component -> target component
    for (const PointOnVariety& p : probes.points) {
        auto si = sf.chi(p);
        if (!si) return false;
        PointOnVariety q = point_map(p);
        auto di = df.chi(q);
        if (!di) return false;  // probe leaves the target union
        if (!dst.oracle()->member(*di)) return false;
        auto [it, fresh] = routing.emplace(*si, *di);
        if (!fresh && it->second != *di) return false;  // component split across targets
        if (probes.coordinate_map) {
            // the point map must agree with the declared polynomial map
            const auto& images = *probes.coordinate_map;
            if (images.size() != q.coords.size()) return false;
            for (std::size_t j = 0; j < images.size(); ++j)
                if (images[j].evaluate(p.coords) != q.coords[j]) return false;
        }
    }
    if (probes.coordinate_map) {
        // section maps are precompositions: check the ring conditions on probes
        const auto& images = *probes.coordinate_map;
        for (std::size_t a = 0; a < probes.sections.size(); ++a) {
            for (std::size_t b = a; b < probes.sections.size(); ++b) {
                Fraction fa = probes.sections[a], fb = probes.sections[b];
                Fraction sum_pull(Fraction(fa + fb).num().substitute(images),
                                  Fraction(fa + fb).den().substitute(images));
                Fraction pull_sum = Fraction(fa.num().substitute(images),
                                             fa.den().substitute(images)) +
                                    Fraction(fb.num().substitute(images),
                                             fb.den().substitute(images));
                if (!(sum_pull == pull_sum)) return false;
                Fraction prod_pull(Fraction(fa * fb).num().substitute(images),
                                   Fraction(fa * fb).den().substitute(images));
                Fraction pull_prod = Fraction(fa.num().substitute(images),
                                              fa.den().substitute(images)) *
                                     Fraction(fb.num().substitute(images),
                                              fb.den().substitute(images));
                if (!(prod_pull == pull_prod)) return false;
            }
        }
    }
    return true;
}

unsigned decide_pair(const PointSource& copy, unsigned i, unsigned j,
                     const ComponentFamily& family) {
    for (std::uint64_t idx = 0;; ++idx) {
        auto p = copy(idx);
        if (!p) throw std::runtime_error("structure exhausted before classifying the pair");
        auto c = family.chi(*p);
        if (!c) continue;
        if (*c == i) return i;
        if (*c == j) return j;
    }
}

std::set<unsigned> enumerate_components(const PointSource& copy, const ComponentFamily& family,
                                        std::uint64_t budget) {
    std::set<unsigned> out;
    for (std::uint64_t idx = 0; idx < budget; ++idx) {
        auto p = copy(idx);
        if (!p) break;
        auto c = family.chi(*p);
        if (c) out.insert(*c);
    }
    return out;
}

RigidityReport rigidity_certify(const ComponentFamily& family, unsigned prefix) {
    RigidityReport report;
    report.kind = family.rigidity;
    if (family.max_index && prefix > family.max_index)
        throw std::domain_error("prefix exceeds the family's generated range");
    std::vector<std::string> invs;
    for (unsigned i = 1; i <= prefix; ++i) invs.push_back(family.invariant(i));
    for (unsigned i = 0; i < invs.size(); ++i) {
        for (unsigned k = i + 1; k < invs.size(); ++k) {
            if (invs[i] == invs[k]) {
                report.pass = false;
                report.collision = {i + 1, k + 1};
                std::ostringstream os;
                os << "components " << (i + 1) << " and " << (k + 1)
                   << " share the invariant " << invs[i];
                report.detail = os.str();
                return report;
            }
        }
    }
    std::ostringstream os;
    os << "pairwise distinct over prefix " << prefix;
    report.detail = os.str();
    return report;
}

}  // namespace ringbench::unions
