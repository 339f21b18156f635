#include "doctest.h"

#include "ringbench/spaces.hpp"

using namespace ringbench;
using namespace ringbench::exactalg;
using namespace ringbench::spaces;

namespace {

SparsePolynomial P(const std::string& s, unsigned nvars) {
    return SparsePolynomial::parse(s, nvars);
}

geometry::VarietyHandle parabola() {
    return std::make_shared<geometry::VarietyPresentation>(
        2, IdealPresentation(2, {P("x2 - x1^2", 2)}));
}

geometry::VarietyHandle line() {
    return std::make_shared<geometry::VarietyPresentation>(
        geometry::VarietyPresentation::affine_space(1));
}

PointOnVariety pt(std::initializer_list<long> coords) {
    std::vector<FieldElement> c;
    for (long x : coords) c.emplace_back(x);
    return PointOnVariety{std::move(c)};
}

}  // namespace

TEST_CASE("open descriptor algebra") {
    auto a = SpaceOpen::cofinite({pt({1, 1})});
    auto b = SpaceOpen::cofinite({pt({2, 4})});
    auto meet = open_ops(a, b, OpenOp::intersect);
    CHECK(meet.excluded.size() == 2);
    auto join = open_ops(a, b, OpenOp::unite);
    CHECK(join.excluded.empty());

    auto za = SpaceOpen::zariski(IdealPresentation(2, {P("x1", 2)}));
    auto zb = SpaceOpen::zariski(IdealPresentation(2, {P("x2", 2)}));
    auto zmeet = open_ops(za, zb, OpenOp::intersect);
    // intersection of opens: complement ideal is the product
    CHECK(ideal_member(P("x1*x2", 2), zmeet.complement_ideal));
    CHECK_FALSE(ideal_member(P("x1", 2), zmeet.complement_ideal));

    CHECK_THROWS_AS(open_ops(a, za, OpenOp::intersect), std::domain_error);

    // whole and empty are identities and absorbers
    CHECK(open_ops(SpaceOpen::whole(), za, OpenOp::intersect) == za);
    CHECK(open_ops(SpaceOpen::empty(), za, OpenOp::unite) == za);

    // literal sets over a finite carrier
    auto la = SpaceOpen::literal({0, 1, 2});
    auto lb = SpaceOpen::literal({2, 3});
    CHECK(open_ops(la, lb, OpenOp::intersect) == SpaceOpen::literal({2}));
    CHECK(open_ops(la, lb, OpenOp::unite) == SpaceOpen::literal({0, 1, 2, 3}));

    // De Morgan on the excluded sets, exactly
    auto c1 = SpaceOpen::cofinite({pt({1, 1}), pt({2, 4})});
    auto c2 = SpaceOpen::cofinite({pt({2, 4}), pt({3, 9})});
    auto cm = open_ops(c1, c2, OpenOp::intersect);
    CHECK(cm.excluded.size() == 3);  // union of the complements
    auto cj = open_ops(c1, c2, OpenOp::unite);
    REQUIRE(cj.excluded.size() == 1);  // intersection of the complements
    CHECK(cj.excluded[0].coords == pt({2, 4}).coords);

    // member
    CHECK_FALSE(open_member(pt({1, 1}), a));
    CHECK(open_member(pt({0, 0}), a));
    CHECK(open_member(pt({1, 1}), za));   // x=1 not in V(x1)
    CHECK_FALSE(open_member(pt({0, 5}), za));
}

TEST_CASE("zariski sheaf of a plane curve passes the axiom check") {
    auto s = SheafPresentation::regular(parabola(), TopologyKind::zariski);
    SpaceOpen u = SpaceOpen::whole();
    std::vector<SpaceOpen> cover{
        SpaceOpen::zariski(IdealPresentation(2, {P("x1", 2)})),
        SpaceOpen::zariski(IdealPresentation(2, {P("x1 - 1", 2)})),
    };
    std::vector<Fraction> probes{
        Fraction::from_polynomial(P("x2", 2)),
        Fraction::from_polynomial(P("x1 + 3", 2)),
        Fraction(P("1", 2), P("x1^2 + 1", 2)),
        Fraction(P("1", 2), P("x1", 2)),      // only on the first cover element
    };
    auto report = sheaf_axioms_check(s, u, cover, probes);
    CHECK(report.pass);

    // a cover that does not cover is a precondition error
    std::vector<SpaceOpen> bad_cover{cover[0], cover[0]};
    CHECK_THROWS_AS(sheaf_axioms_check(s, u, bad_cover, probes), std::domain_error);
}

TEST_CASE("corrupted presentations fail with witnesses") {
    auto s = SheafPresentation::regular(parabola(), TopologyKind::zariski);
    SpaceOpen u = SpaceOpen::whole();
    std::vector<SpaceOpen> cover{
        SpaceOpen::zariski(IdealPresentation(2, {P("x1", 2)})),
        SpaceOpen::zariski(IdealPresentation(2, {P("x1 - 1", 2)})),
    };
    Fraction glob = Fraction::from_polynomial(P("x2", 2));
    std::vector<Fraction> probes{glob};

    // (a) F(U) omits a compatible section
    auto omitting = s.with_omitted(u, glob);
    auto r1 = sheaf_axioms_check(omitting, u, cover, probes);
    CHECK_FALSE(r1.pass);
    REQUIRE(!r1.failures.empty());
    CHECK(r1.failures[0].find("glues to no section") != std::string::npos);

    // (b) F(empty) != {0}
    auto bad_empty = s.with_nonzero_empty_ring();
    auto r2 = sheaf_axioms_check(bad_empty, u, cover, probes);
    CHECK_FALSE(r2.pass);

    // (c) a forced section that does not restrict into the cover rings
    auto forced = s.with_forced(u, Fraction(P("1", 2), P("x1", 2)));
    std::vector<Fraction> probes2{Fraction(P("1", 2), P("x1", 2))};
    auto r3 = sheaf_axioms_check(forced, u, cover, probes2);
    CHECK_FALSE(r3.pass);
    CHECK(r3.failures[0].find("does not restrict") != std::string::npos);
}

TEST_CASE("cofinite weakening still passes (weaker topology lemma)") {
    auto s = SheafPresentation::regular(parabola(), TopologyKind::cofinite);
    SpaceOpen u = SpaceOpen::whole();
    std::vector<SpaceOpen> cover{
        SpaceOpen::cofinite({pt({0, 0})}),
        SpaceOpen::cofinite({pt({1, 1})}),
    };
    std::vector<Fraction> probes{
        Fraction::from_polynomial(P("x1*x2", 2)),
        Fraction(P("1", 2), P("x1^2 + 1", 2)),
        Fraction(P("1", 2), P("x1", 2)),   // regular away from x1 = 0
    };
    auto report = sheaf_axioms_check(s, u, cover, probes);
    CHECK(report.pass);

    // 1/x1 is a section over the first cover element but not over U
    CHECK(s.section_member(probes[2], cover[0]));
    CHECK_FALSE(s.section_member(probes[2], u));
}

TEST_CASE("union ringed subspace sheaf passes on a finite cover") {
    auto fam = unions::elliptic_fiber_family();
    auto oracle = std::make_shared<harness::OracleSet>(harness::OracleSet::finite({1, 2}));
    auto y = std::make_shared<unions::UnionStructure>(
        fam, oracle, unions::UnionMode::subspaces_of_fixed_z);
    auto s = SheafPresentation::union_quotient(y);

    SpaceOpen u = SpaceOpen::whole();
    auto p10 = *fam.point_gen(1, 0);
    auto p20 = *fam.point_gen(2, 0);
    std::vector<SpaceOpen> cover{
        SpaceOpen::cofinite({p10}),
        SpaceOpen::cofinite({p20}),
    };
    std::vector<Fraction> probes{
        Fraction::from_polynomial(P("x3", 3)),
        Fraction(P("1", 3), P("x3 - 5", 3)),
        Fraction::from_polynomial(P("x2^2 - x1^3 - x1 - x3", 3)),  // zero class
    };
    auto report = sheaf_axioms_check(s, u, cover, probes);
    CHECK(report.pass);
    // the surface relation really is the zero class
    CHECK(s.section_is_zero(probes[2], u));
    CHECK_FALSE(s.section_is_zero(probes[0], u));
}

TEST_CASE("z-class checks") {
    auto s = SheafPresentation::regular(parabola(), TopologyKind::zariski);
    std::vector<SpaceOpen> sample{
        SpaceOpen::zariski(IdealPresentation(2, {P("x1", 2)})),
        SpaceOpen::zariski(IdealPresentation(2, {P("x1 - 1", 2)})),
    };
    std::vector<Fraction> probes{
        Fraction::from_polynomial(P("x1", 2)),
        Fraction(P("1", 2), P("x1", 2)),
        Fraction(P("1", 2), P("x1^2 - x1", 2)),
    };
    CHECK(zclass_check(s, sample, probes).pass);

    auto cof = SheafPresentation::regular(parabola(), TopologyKind::cofinite);
    std::vector<SpaceOpen> cof_sample{
        SpaceOpen::cofinite({pt({0, 0})}),
        SpaceOpen::cofinite({pt({1, 1})}),
    };
    CHECK(zclass_check(cof, cof_sample, probes).pass);

    // non-inclusion restriction rule fails
    auto corrupted = s.with_restriction_rule(SheafPresentation::RestrictionRule::corrupted);
    auto r = zclass_check(corrupted, sample, probes);
    CHECK_FALSE(r.pass);

    // an "everything" presentation violates condition (4)
    auto everything = SheafPresentation::everything(parabola(), TopologyKind::zariski);
    auto r4 = zclass_check(everything, sample, probes);
    CHECK_FALSE(r4.pass);
}

TEST_CASE("lr morphism checks") {
    auto src = SheafPresentation::regular(line(), TopologyKind::zariski);
    auto dst = SheafPresentation::regular(line(), TopologyKind::zariski);

    LrProbe probe;
    for (long v : {0, 1, -1, 2, 5}) probe.points.push_back(pt({v}));
    SpaceOpen dst_open = SpaceOpen::zariski(IdealPresentation(1, {P("x1 - 1", 1)}));
    probe.sections.push_back(Fraction::from_polynomial(P("x1 + 2", 1)));
    probe.sections.push_back(Fraction(P("1", 1), P("x1 - 1", 1)));

    // identity
    probe.opens = {{dst_open, dst_open}};
    std::vector<SparsePolynomial> ident{P("x1", 1)};
    CHECK(lr_morphism_check(src, dst, ident, probe));

    // shift map x -> x + 1: preimage of {x != 1} is {x != 0}
    std::vector<SparsePolynomial> shift{P("x1 + 1", 1)};
    LrProbe shifted = probe;
    shifted.opens = {{dst_open, SpaceOpen::zariski(IdealPresentation(1, {P("x1", 1)}))}};
    CHECK(lr_morphism_check(src, dst, shift, shifted));
    // with the wrong claimed preimage the check fails
    LrProbe wrong = probe;
    wrong.opens = {{dst_open, dst_open}};
    CHECK_FALSE(lr_morphism_check(src, dst, shift, wrong));

    // a section map that is not a ring morphism fails
    auto bad_map = [](const Fraction& f) {
        return f + Fraction::constant(f.variable_count(), FieldElement(1));
    };
    CHECK_FALSE(lr_morphism_check(src, dst, ident, probe, bad_map));
}

TEST_CASE("fiber inclusion into a surface is a composition morphism") {
    // phi: fiber {z = 2} of the surface y^2 = x^3 + x + z, included by
    // (x, y) -> (x, y, 2); sections of the surface pull back by substitution
    auto fiber = std::make_shared<geometry::VarietyPresentation>(
        2, IdealPresentation(2, {P("x2^2 - x1^3 - x1 - 2", 2)}));
    auto surface = std::make_shared<geometry::VarietyPresentation>(
        3, IdealPresentation(3, {P("x2^2 - x1^3 - x1 - x3", 3)}));
    auto src = SheafPresentation::regular(fiber, TopologyKind::zariski);
    auto dst = SheafPresentation::regular(surface, TopologyKind::zariski);

    std::vector<SparsePolynomial> inclusion{P("x1", 2), P("x2", 2), P("2", 2)};
    LrProbe probe;
    probe.points.push_back(pt({0, 0}));  // dummy rational probe points on the plane
    probe.points.push_back(pt({1, 2}));
    probe.sections.push_back(Fraction::from_polynomial(P("x3 + x1", 3)));
    probe.sections.push_back(Fraction(P("1", 3), P("x3 - 5", 3)));
    SpaceOpen dst_open = SpaceOpen::zariski(IdealPresentation(3, {P("x3 - 5", 3)}));
    // preimage of {x3 != 5} under the inclusion is the whole fiber
    SpaceOpen pre = SpaceOpen::zariski(IdealPresentation(2, {P("1", 2)}));
    probe.opens = {{dst_open, pre}};
    CHECK(lr_morphism_check(src, dst, inclusion, probe));
}

TEST_CASE("co-finite bijections work both ways (finitely-many-to-one remark)") {
    auto src = SheafPresentation::regular(line(), TopologyKind::cofinite);
    LrProbe probe;
    for (long v : {0, 1, -1, 2, -2, 3}) probe.points.push_back(pt({v}));
    probe.sections.push_back(Fraction::from_polynomial(P("x1", 1)));
    SpaceOpen dst_open = SpaceOpen::cofinite({pt({2})});
    SpaceOpen pre = SpaceOpen::cofinite({pt({1})});  // x+1 = 2 at x = 1
    probe.opens = {{dst_open, pre}};
    std::vector<SparsePolynomial> shift{P("x1 + 1", 1)};
    CHECK(lr_morphism_check(src, src, shift, probe));

    // and the inverse map passes too
    LrProbe back;
    back.points = probe.points;
    back.sections = probe.sections;
    back.opens = {{pre, dst_open}};
    std::vector<SparsePolynomial> unshift{P("x1 - 1", 1)};
    CHECK(lr_morphism_check(src, src, unshift, back));
}

TEST_CASE("stalk membership") {
    auto l = line();
    geometry::RationalFunction inv_x(P("1", 1), P("x1", 1), l);
    CHECK(stalk_member(inv_x, pt({1})));
    CHECK_FALSE(stalk_member(inv_x, pt({0})));

    auto par = parabola();
    geometry::RationalFunction inv_y(P("1", 2), P("x2", 2), par);
    CHECK_FALSE(stalk_member(inv_y, pt({0, 0})));
    CHECK(stalk_member(inv_y, pt({1, 1})));

    // x2/x1 = x1 on the parabola: regular at the origin despite the form
    geometry::RationalFunction yox(P("x2", 2), P("x1", 2), par);
    CHECK(stalk_member(yox, pt({0, 0})));
}

TEST_CASE("sheaf restriction to a cofinite subset") {
    auto s = SheafPresentation::regular(line(), TopologyKind::cofinite);
    auto restricted = s.restricted_to_complement_of({pt({0})});

    // 1/x1 becomes a global section: its only zero sits outside the subset
    Fraction inv_x(P("1", 1), P("x1", 1));
    CHECK_FALSE(s.section_member(inv_x, SpaceOpen::whole()));
    CHECK(restricted.section_member(inv_x, SpaceOpen::whole()));
    // 1/(x1-1) still blows up inside the subset
    Fraction inv_x1(P("1", 1), P("x1 - 1", 1));
    CHECK_FALSE(restricted.section_member(inv_x1, SpaceOpen::whole()));

    // restriction to the whole space changes nothing
    auto same = s.restricted_to_complement_of({});
    CHECK(same.section_member(inv_x, SpaceOpen::whole()) ==
          s.section_member(inv_x, SpaceOpen::whole()));

    // idempotence
    auto twice = restricted.restricted_to_complement_of({pt({0})});
    CHECK(twice.removed_points().size() == 1);
    CHECK(twice.section_member(inv_x, SpaceOpen::whole()));
}

TEST_CASE("direct images") {
    auto src = std::make_shared<SheafPresentation>(
        SheafPresentation::regular(line(), TopologyKind::zariski));

    // identity: same sections
    auto ident = SheafPresentation::direct_image(
        src, {SheafPresentation::PointMap::Kind::identity, {}, {}});
    Fraction inv_x(P("1", 1), P("x1", 1));
    SpaceOpen away0 = SpaceOpen::zariski(IdealPresentation(1, {P("x1", 1)}));
    CHECK(ident.section_member(inv_x, away0) == src->section_member(inv_x, away0));

    // constant map to the point 1: preimage of an open containing 1 is
    // everything, so sections must be globally regular
    SheafPresentation::PointMap to_one;
    to_one.kind = SheafPresentation::PointMap::Kind::constant;
    to_one.constant_target = pt({1});
    auto pushed = SheafPresentation::direct_image(src, to_one);
    CHECK_FALSE(pushed.section_member(inv_x, away0));          // 1 in the open, not global
    CHECK(pushed.section_member(Fraction::from_polynomial(P("x1 + 2", 1)), away0));
    // an open avoiding the point pulls back to the empty set
    SpaceOpen away1 = SpaceOpen::zariski(IdealPresentation(1, {P("x1 - 1", 1)}));
    CHECK(pushed.preimage(away1).kind == SpaceOpen::Kind::empty);
    CHECK_FALSE(pushed.section_member(Fraction::constant(1, FieldElement(2)), away1));

    // coordinate map x -> x^2: complement ideals pull back by substitution
    SheafPresentation::PointMap square;
    square.kind = SheafPresentation::PointMap::Kind::coordinate;
    square.images = {P("x1^2", 1)};
    auto squared = SheafPresentation::direct_image(src, square);
    SpaceOpen away4 = SpaceOpen::zariski(IdealPresentation(1, {P("x1 - 4", 1)}));
    auto pre = squared.preimage(away4);
    CHECK(ideal_member(P("x1^2 - 4", 1), pre.complement_ideal));
    // direct-image sections over V are source sections over the preimage:
    // 1/(x1^2-4) is regular exactly off x = +-2
    CHECK(squared.section_member(Fraction(P("1", 1), P("x1^2 - 4", 1)), away4));
    // 1/(x1-4) blows up at x = 4, which stays inside the preimage open
    CHECK_FALSE(squared.section_member(Fraction(P("1", 1), P("x1 - 4", 1)), away4));
}

TEST_CASE("lr sentence protocol round trips") {
    for (std::string line : {"PT 3 IN 5", "SEC 0 IN 2", "ADD 1 2 3 4", "MUL 7 0 0 0",
                             "RES 1 2 3 4"}) {
        auto s = LRSentence::parse(line);
        CHECK(s.to_string() == line);
    }
    CHECK_THROWS_AS(LRSentence::parse("PT x IN 2"), std::invalid_argument);
    CHECK_THROWS_AS(LRSentence::parse("FOO 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(LRSentence::parse("PT 1 IN 2 3"), std::invalid_argument);
    CHECK_THROWS_AS(LRSentence::parse(""), std::invalid_argument);
}
