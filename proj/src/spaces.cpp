#include "ringbench/spaces.hpp"

#include <algorithm>
#include <sstream>

namespace ringbench::spaces {

using namespace exactalg;

namespace {

std::string point_text(const PointOnVariety& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) os << ", ";
        os << p.coords[i].to_string();
    }
    os << ")";
    return os.str();
}

}  // namespace

SpaceOpen SpaceOpen::whole() { return SpaceOpen{}; }

SpaceOpen SpaceOpen::empty() {
    SpaceOpen u;
    u.kind = Kind::empty;
    return u;
}

SpaceOpen SpaceOpen::cofinite(std::vector<PointOnVariety> excluded) {
    SpaceOpen u;
    u.kind = Kind::cofinite;
    u.excluded = std::move(excluded);
    return u;
}

SpaceOpen SpaceOpen::zariski(IdealPresentation complement) {
    SpaceOpen u;
    u.kind = Kind::zariski;
    u.complement_ideal = std::move(complement);
    return u;
}

SpaceOpen SpaceOpen::literal(std::vector<std::size_t> members) {
    SpaceOpen u;
    u.kind = Kind::literal;
    u.members = std::move(members);
    std::sort(u.members.begin(), u.members.end());
    u.members.erase(std::unique(u.members.begin(), u.members.end()), u.members.end());
    return u;
}

std::string SpaceOpen::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::whole: return "whole";
        case Kind::empty: return "empty";
        case Kind::cofinite: {
            os << "cofinite{";
            std::vector<std::string> parts;
            for (const auto& p : excluded) parts.push_back(point_text(p));
            std::sort(parts.begin(), parts.end());
            for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? ", " : "") << parts[i];
            os << "}";
            return os.str();
        }
        case Kind::zariski: {
            os << "zariski-complement{";
            const auto& basis = complement_ideal.groebner();
            for (std::size_t i = 0; i < basis.size(); ++i)
                os << (i ? "; " : "") << basis[i].to_string();
            os << "}";
            return os.str();
        }
        case Kind::literal: {
            os << "literal{";
            for (std::size_t i = 0; i < members.size(); ++i)
                os << (i ? ", " : "") << members[i];
            os << "}";
            return os.str();
        }
    }
    return "?";
}

SpaceOpen open_ops(const SpaceOpen& a, const SpaceOpen& b, OpenOp op) {
    using K = SpaceOpen::Kind;
    // degenerate identities first
    if (a.kind == K::whole) return op == OpenOp::intersect ? b : a;
    if (b.kind == K::whole) return op == OpenOp::intersect ? a : b;
    if (a.kind == K::empty) return op == OpenOp::intersect ? a : b;
    if (b.kind == K::empty) return op == OpenOp::intersect ? b : a;
    if (a.kind != b.kind) throw std::domain_error("open descriptors of mixed kinds");
    switch (a.kind) {
        case K::cofinite: {
            std::vector<PointOnVariety> pts;
            if (op == OpenOp::intersect) {
                // union of the excluded sets
                pts = a.excluded;
                for (const auto& p : b.excluded) {
                    bool seen = std::any_of(pts.begin(), pts.end(), [&](const auto& q) {
                        return q.coords == p.coords;
                    });
                    if (!seen) pts.push_back(p);
                }
            } else {
                // intersection of the excluded sets
                for (const auto& p : a.excluded)
                    for (const auto& q : b.excluded)
                        if (p.coords == q.coords) pts.push_back(p);
            }
            return SpaceOpen::cofinite(std::move(pts));
        }
        case K::zariski: {
            // intersect opens = union of closed sets = product ideal;
            // unite opens = intersection of closed sets = ideal sum
            if (op == OpenOp::intersect)
                return SpaceOpen::zariski(ideal_product(a.complement_ideal, b.complement_ideal));
            return SpaceOpen::zariski(ideal_sum(a.complement_ideal, b.complement_ideal));
        }
        case K::literal: {
            std::vector<std::size_t> out;
            if (op == OpenOp::intersect) {
                std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                                      b.members.end(), std::back_inserter(out));
            } else {
                std::set_union(a.members.begin(), a.members.end(), b.members.begin(),
                               b.members.end(), std::back_inserter(out));
            }
            return SpaceOpen::literal(std::move(out));
        }
        default: throw std::logic_error("unreachable");
    }
}

bool open_member(const PointOnVariety& p, const SpaceOpen& u) {
    switch (u.kind) {
        case SpaceOpen::Kind::whole: return true;
        case SpaceOpen::Kind::empty: return false;
        case SpaceOpen::Kind::cofinite:
            return std::none_of(u.excluded.begin(), u.excluded.end(),
                                [&](const auto& q) { return q.coords == p.coords; });
        case SpaceOpen::Kind::zariski: {
            // in the open iff not every complement generator vanishes
            if (u.complement_ideal.generators().empty()) return false;
            for (const auto& g : u.complement_ideal.generators())
                if (!g.evaluate(p.coords).is_zero()) return true;
            return false;
        }
        case SpaceOpen::Kind::literal:
            throw std::domain_error("literal opens are index sets, not point predicates");
    }
    return false;
}

SheafPresentation SheafPresentation::regular(VarietyHandle carrier, TopologyKind topology) {
    SheafPresentation s;
    s.backing_ = Backing::regular_functions;
    s.topology_ = topology;
    s.carrier_ = std::move(carrier);
    return s;
}

SheafPresentation SheafPresentation::union_quotient(
    std::shared_ptr<const unions::UnionStructure> y) {
    SheafPresentation s;
    s.backing_ = Backing::union_quotient;
    s.topology_ = TopologyKind::weak_union;
    s.union_ = std::move(y);
    if (s.union_->family().ambient)
        s.carrier_ = std::make_shared<VarietyPresentation>(*s.union_->family().ambient);
    return s;
}

SheafPresentation SheafPresentation::everything(VarietyHandle carrier, TopologyKind topology) {
    SheafPresentation s;
    s.backing_ = Backing::everything;
    s.topology_ = topology;
    s.carrier_ = std::move(carrier);
    return s;
}

SheafPresentation SheafPresentation::direct_image(
    std::shared_ptr<const SheafPresentation> source, PointMap map) {
    SheafPresentation s;
    s.backing_ = Backing::direct_image;
    s.topology_ = source->topology_;
    s.carrier_ = source->carrier_;
    s.source_ = std::move(source);
    s.map_ = std::move(map);
    return s;
}

SheafPresentation SheafPresentation::with_omitted(SpaceOpen u, Fraction f) const {
    SheafPresentation s = *this;
    s.omitted_.emplace_back(std::move(u), std::move(f));
    return s;
}

SheafPresentation SheafPresentation::with_forced(SpaceOpen u, Fraction f) const {
    SheafPresentation s = *this;
    s.forced_.emplace_back(std::move(u), std::move(f));
    return s;
}

SheafPresentation SheafPresentation::with_nonzero_empty_ring() const {
    SheafPresentation s = *this;
    s.nonzero_empty_ = true;
    return s;
}

SheafPresentation SheafPresentation::with_restriction_rule(RestrictionRule rule) const {
    SheafPresentation s = *this;
    s.restriction_rule_ = rule;
    return s;
}

SheafPresentation SheafPresentation::restricted_to_complement_of(
    std::vector<PointOnVariety> removed) const {
    SheafPresentation s = *this;
    for (const auto& p : removed) {
        bool seen = std::any_of(s.removed_.begin(), s.removed_.end(),
                                [&](const auto& q) { return q.coords == p.coords; });
        if (!seen) s.removed_.push_back(p);
    }
    return s;
}

SpaceOpen SheafPresentation::preimage(const SpaceOpen& v) const {
    if (backing_ != Backing::direct_image)
        throw std::domain_error("preimage is defined for direct images");
    switch (map_.kind) {
        case PointMap::Kind::identity: return v;
        case PointMap::Kind::constant:
            return open_member(map_.constant_target, v) ? SpaceOpen::whole()
                                                        : SpaceOpen::empty();
        case PointMap::Kind::coordinate: {
            if (v.kind == SpaceOpen::Kind::whole || v.kind == SpaceOpen::Kind::empty) return v;
            if (v.kind != SpaceOpen::Kind::zariski)
                throw std::domain_error(
                    "coordinate maps pull back Zariski descriptors only");
            std::vector<SparsePolynomial> gens;
            for (const auto& g : v.complement_ideal.generators())
                gens.push_back(g.substitute(map_.images));
            unsigned n = map_.images.empty() ? 0 : map_.images[0].variable_count();
            return SpaceOpen::zariski(IdealPresentation(n, std::move(gens)));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// complement ideal of a descriptor inside the carrier's ambient ring
IdealPresentation complement_ideal_of(const SpaceOpen& u, unsigned nvars) {
    switch (u.kind) {
        case SpaceOpen::Kind::whole:
            return IdealPresentation(nvars,
                                     {SparsePolynomial::constant(nvars, FieldElement(1))});
        case SpaceOpen::Kind::zariski: return u.complement_ideal;
        case SpaceOpen::Kind::cofinite: {
            if (u.excluded.empty())
                return IdealPresentation(nvars,
                                         {SparsePolynomial::constant(nvars, FieldElement(1))});
            IdealPresentation acc = unions::point_vanishing_ideal(u.excluded[0], nvars);
            for (std::size_t i = 1; i < u.excluded.size(); ++i)
                acc = ideal_intersect(acc, unions::point_vanishing_ideal(u.excluded[i], nvars));
            return acc;
        }
        default:
            throw std::domain_error("no complement ideal for this descriptor kind");
    }
}

}  // namespace

bool SheafPresentation::section_member(const Fraction& f, const SpaceOpen& u) const {
    for (const auto& [open, frac] : forced_)
        if (open == u && frac == f) return true;
    for (const auto& [open, frac] : omitted_)
        if (open == u && frac == f) return false;
    if (u.kind == SpaceOpen::Kind::empty) {
        if (nonzero_empty_) return true;  // corrupted: F(empty) != {0}
        return f.is_zero();
    }
    switch (backing_) {
        case Backing::everything: return true;
        case Backing::regular_functions: {
            unsigned n = carrier_->ambient_dimension();
            IdealPresentation complement = complement_ideal_of(u, n);
            if (!removed_.empty()) {
                // sections over U_Y come from any enclosing open: zeros of
                // the denominator may also hide in the removed points
                IdealPresentation removed_ideal =
                    unions::point_vanishing_ideal(removed_[0], n);
                for (std::size_t i = 1; i < removed_.size(); ++i)
                    removed_ideal = ideal_intersect(
                        removed_ideal, unions::point_vanishing_ideal(removed_[i], n));
                complement = complement.generators().empty()
                                 ? removed_ideal
                                 : ideal_intersect(complement, removed_ideal);
            }
            try {
                RationalFunction rf(f.num(), f.den(), carrier_);
                return fn_defined_on_open(rf, complement);
            } catch (const std::domain_error&) {
                return false;  // denominator vanishes identically on the carrier
            }
        }
        case Backing::union_quotient: {
            unions::WeakOpen w;
            switch (u.kind) {
                case SpaceOpen::Kind::whole: w.ambient = unions::ZOpen::whole(); break;
                case SpaceOpen::Kind::cofinite:
                    w.ambient = unions::ZOpen::cofinite(u.excluded);
                    break;
                case SpaceOpen::Kind::zariski:
                    w.ambient = unions::ZOpen::zariski(u.complement_ideal);
                    break;
                default: throw std::domain_error("unsupported open for a union quotient");
            }
            return unions::union_section_member(f, w, *union_);
        }
        case Backing::direct_image: return source_->section_member(f, preimage(u));
    }
    return false;
}

bool SheafPresentation::section_is_zero(const Fraction& f, const SpaceOpen& u) const {
    if (f.is_zero()) return true;
    if (backing_ == Backing::union_quotient) {
        // the class of f vanishes iff the numerator lies in I(Y)
        return ideal_member(f.num(), union_->ideal_of_y());
    }
    (void)u;
    return false;
}

namespace {

// does the union of the cover descriptors equal u (descriptor level,
// relative to the carrier variety when one is supplied)?
bool cover_covers(const SpaceOpen& u, const std::vector<SpaceOpen>& cover,
                  const IdealPresentation* carrier_ideal) {
    if (cover.empty()) return u.kind == SpaceOpen::Kind::empty;
    SpaceOpen acc = cover[0];
    for (std::size_t i = 1; i < cover.size(); ++i) acc = open_ops(acc, cover[i], OpenOp::unite);
    if (acc.kind == u.kind && acc == u) return true;
    if (acc.kind == SpaceOpen::Kind::whole && u.kind == SpaceOpen::Kind::whole) return true;
    auto with_carrier = [&](const IdealPresentation& ideal) {
        return carrier_ideal ? ideal_sum(ideal, *carrier_ideal) : ideal;
    };
    // Zariski: equality of closed sets up to radical, both directions
    if (acc.kind == SpaceOpen::Kind::zariski && u.kind == SpaceOpen::Kind::zariski) {
        IdealPresentation a = with_carrier(acc.complement_ideal);
        IdealPresentation b = with_carrier(u.complement_ideal);
        for (const auto& g : acc.complement_ideal.generators())
            if (!radical_member(g, b)) return false;
        for (const auto& g : u.complement_ideal.generators())
            if (!radical_member(g, a)) return false;
        return true;
    }
    // the union of covers of the whole space must exclude nothing
    if (u.kind == SpaceOpen::Kind::whole && acc.kind == SpaceOpen::Kind::cofinite)
        return acc.excluded.empty();
    if (u.kind == SpaceOpen::Kind::whole && acc.kind == SpaceOpen::Kind::zariski)
        return with_carrier(acc.complement_ideal).contains_one();
    return false;
}

}  // namespace

SheafReport sheaf_axioms_check(const SheafPresentation& s, const SpaceOpen& u,
                               const std::vector<SpaceOpen>& cover,
                               const std::vector<Fraction>& probes) {
    const IdealPresentation* carrier_ideal =
        s.carrier() ? &s.carrier()->defining_ideal() : nullptr;
    if (!cover_covers(u, cover, carrier_ideal))
        throw std::domain_error("the proposed cover does not cover the open set");
    SheafReport report;
    auto fail = [&report](std::string why) {
        report.pass = false;
        report.failures.push_back(std::move(why));
    };

    // presheaf conditions: F(empty) = {0}, inclusion restrictions
    if (!s.section_member(Fraction::constant(
            s.carrier() ? s.carrier()->ambient_dimension() : 0, FieldElement(0)),
                          SpaceOpen::empty()))
        fail("the zero section is missing from F(empty)");
    if (s.section_member(Fraction::constant(
            s.carrier() ? s.carrier()->ambient_dimension() : 0, FieldElement(1)),
                         SpaceOpen::empty()))
        fail("F(empty) contains a nonzero section");
    if (s.restriction_rule() != SheafPresentation::RestrictionRule::inclusion)
        fail("restriction maps are not inclusions");

    for (const Fraction& f : probes) {
        bool in_u = s.section_member(f, u);
        std::vector<bool> in_cover;
        for (const SpaceOpen& v : cover) in_cover.push_back(s.section_member(f, v));
        // restriction stays in the rings
        if (in_u) {
            for (std::size_t i = 0; i < cover.size(); ++i)
                if (!in_cover[i])
                    fail("section " + f.to_string() + " of F(U) does not restrict into cover element " +
                         std::to_string(i));
        }
        // gluing: compatible on every cover element (restrictions are
        // inclusions, so the family is automatically compatible)
        bool everywhere = std::all_of(in_cover.begin(), in_cover.end(), [](bool b) { return b; });
        if (everywhere && !in_u)
            fail("compatible family " + f.to_string() + " glues to no section of F(U)");
        // identity axiom: zero on every cover element forces zero
        if (in_u && everywhere) {
            bool zero_everywhere = true;
            for (const SpaceOpen& v : cover)
                if (!s.section_is_zero(f, v)) { zero_everywhere = false; break; }
            if (zero_everywhere && !s.section_is_zero(f, u))
                fail("section " + f.to_string() + " vanishes on the cover but not globally");
        }
    }
    return report;
}

SheafReport zclass_check(const SheafPresentation& s, const std::vector<SpaceOpen>& sample_opens,
                         const std::vector<Fraction>& probes) {
    SheafReport report;
    auto fail = [&report](std::string why) {
        report.pass = false;
        report.failures.push_back(std::move(why));
    };
    if (s.restriction_rule() != SheafPresentation::RestrictionRule::inclusion)
        fail("condition (5): restriction maps are not inclusions");

    unsigned n = s.carrier() ? s.carrier()->ambient_dimension() : 0;
    // condition (4): sections of F(U) are functions of K(Z) defined on U
    for (const SpaceOpen& v : sample_opens) {
        for (const Fraction& f : probes) {
            if (!s.section_member(f, v)) continue;
            if (v.kind == SpaceOpen::Kind::zariski || v.kind == SpaceOpen::Kind::cofinite ||
                v.kind == SpaceOpen::Kind::whole) {
                try {
                    RationalFunction rf(f.num(), f.den(), s.carrier());
                    if (!fn_defined_on_open(rf, complement_ideal_of(v, n)))
                        fail("condition (4): " + f.to_string() +
                             " is a section but undefined on " + v.to_string());
                } catch (const std::domain_error&) {
                    fail("condition (4): " + f.to_string() + " has an identically vanishing denominator");
                }
            }
        }
    }
    // condition (5) inclusion direction: F(V) subset of F(U) for U inside V
    for (const SpaceOpen& v : sample_opens) {
        SpaceOpen smaller = open_ops(v, sample_opens.front(), OpenOp::intersect);
        for (const Fraction& f : probes)
            if (s.section_member(f, v) && !s.section_member(f, smaller))
                fail("condition (5): " + f.to_string() + " lost under restriction");
    }
    // condition (6): intersection law on the sampled collection
    if (!sample_opens.empty()) {
        SpaceOpen big = sample_opens[0];
        for (std::size_t i = 1; i < sample_opens.size(); ++i)
            big = open_ops(big, sample_opens[i], OpenOp::unite);
        for (const Fraction& f : probes) {
            bool in_all = std::all_of(sample_opens.begin(), sample_opens.end(),
                                      [&](const SpaceOpen& v) { return s.section_member(f, v); });
            bool in_union = s.section_member(f, big);
            if (in_all != in_union)
                fail("condition (6): intersection law fails for " + f.to_string());
        }
    }
    return report;
}

bool lr_morphism_check(const SheafPresentation& src, const SheafPresentation& dst,
                       const std::vector<SparsePolynomial>& coordinate_map,
                       const LrProbe& probes,
                       const std::function<Fraction(const Fraction&)>& section_map) {
    auto apply_point = [&](const PointOnVariety& p) {
        std::vector<FieldElement> out;
        out.reserve(coordinate_map.size());
        for (const auto& g : coordinate_map) out.push_back(g.evaluate(p.coords));
        return PointOnVariety{std::move(out)};
    };
    auto pull = [&](const Fraction& f) {
        if (section_map) return section_map(f);
        return Fraction(f.num().substitute(coordinate_map), f.den().substitute(coordinate_map));
    };

    // continuity: claimed preimages agree with the map on probe points
    for (const auto& [target_open, claimed_preimage] : probes.opens) {
        for (const PointOnVariety& p : probes.points) {
            bool image_in = open_member(apply_point(p), target_open);
            bool preimage_in = open_member(p, claimed_preimage);
            if (image_in != preimage_in) return false;
        }
        // the preimage must be an open of the source topology
        if (src.topology() == TopologyKind::cofinite &&
            claimed_preimage.kind == SpaceOpen::Kind::zariski)
            return false;
    }

    // section maps: land in the right rings, respect + and *, and the
    // restriction squares commute (inclusions: pullbacks must agree)
    for (const auto& [target_open, claimed_preimage] : probes.opens) {
        for (const Fraction& f : probes.sections) {
            if (!dst.section_member(f, target_open)) continue;
            Fraction pf = pull(f);
            if (!src.section_member(pf, claimed_preimage)) return false;
        }
        for (std::size_t a = 0; a < probes.sections.size(); ++a) {
            for (std::size_t b = a; b < probes.sections.size(); ++b) {
                const Fraction& fa = probes.sections[a];
                const Fraction& fb = probes.sections[b];
                if (!(pull(fa + fb) == pull(fa) + pull(fb))) return false;
                if (!(pull(fa * fb) == pull(fa) * pull(fb))) return false;
            }
        }
    }
    return true;
}

std::string LRSentence::to_string() const {
    std::ostringstream os;
    switch (shape) {
        case Shape::point_in_open: os << "PT " << a << " IN " << open_u; break;
        case Shape::section_in_ring: os << "SEC " << a << " IN " << open_u; break;
        case Shape::add_atom: os << "ADD " << open_u << " " << a << " " << b << " " << c; break;
        case Shape::mul_atom: os << "MUL " << open_u << " " << a << " " << b << " " << c; break;
        case Shape::restriction_atom:
            os << "RES " << open_u << " " << open_v << " " << a << " " << b;
            break;
    }
    return os.str();
}

LRSentence LRSentence::parse(const std::string& line) {
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag)) throw std::invalid_argument("empty sentence");
    LRSentence s;
    auto need = [&](std::uint64_t& slot) {
        if (!(is >> slot)) throw std::invalid_argument("malformed sentence: " + line);
    };
    if (tag == "PT" || tag == "SEC") {
        s.shape = tag == "PT" ? Shape::point_in_open : Shape::section_in_ring;
        need(s.a);
        std::string in;
        if (!(is >> in) || in != "IN") throw std::invalid_argument("malformed sentence: " + line);
        need(s.open_u);
    } else if (tag == "ADD" || tag == "MUL") {
        s.shape = tag == "ADD" ? Shape::add_atom : Shape::mul_atom;
        need(s.open_u);
        need(s.a);
        need(s.b);
        need(s.c);
    } else if (tag == "RES") {
        s.shape = Shape::restriction_atom;
        need(s.open_u);
        need(s.open_v);
        need(s.a);
        need(s.b);
    } else {
        throw std::invalid_argument("unknown sentence tag: " + tag);
    }
    std::string rest;
    if (is >> rest) throw std::invalid_argument("trailing text in sentence: " + line);
    return s;
}

bool stalk_member(const RationalFunction& f, const PointOnVariety& p) {
    if (f.numerator().is_zero()) return true;  // the zero function is regular everywhere
    IdealPresentation locus = ideal_sum(f.home()->defining_ideal(), f.denominator());
    IdealPresentation denominators = ideal_quotient(locus, f.numerator());
    for (const SparsePolynomial& g : denominators.generators())
        if (!g.evaluate(p.coords).is_zero()) return true;
    return false;
}

}  // namespace ringbench::spaces
