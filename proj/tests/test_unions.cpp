#include "doctest.h"

#include "ringbench/unions.hpp"

#include <random>

using namespace ringbench;
using namespace ringbench::exactalg;
using namespace ringbench::unions;

namespace {

SparsePolynomial P(const std::string& s, unsigned nvars) {
    return SparsePolynomial::parse(s, nvars);
}

harness::OracleHandle finite_oracle(std::initializer_list<std::uint64_t> xs) {
    return std::make_shared<harness::OracleSet>(harness::OracleSet::finite(xs));
}

PointSource source_of(const UnionStructure& s) {
    return [&s](std::uint64_t idx) { return s.point_at(idx); };
}

}  // namespace

TEST_CASE("oracle backings and logging") {
    auto fin = harness::OracleSet::finite({2, 5});
    CHECK(fin.member(5));
    CHECK_FALSE(fin.member(3));
    CHECK(fin.log().size() == 2);
    CHECK(fin.member(5));
    CHECK(fin.log().size() == 3);  // repeats are logged again
    CHECK(*fin.cardinality() == 2);
    CHECK(*fin.member_at(0) == 2);
    CHECK(*fin.member_at(1) == 5);
    CHECK_FALSE(fin.member_at(2).has_value());
    CHECK(fin.log().size() == 3);  // enumeration does not touch the log

    auto cof = harness::OracleSet::cofinite({1});
    CHECK_FALSE(cof.member(1));
    CHECK(cof.member(7));
    CHECK(*cof.member_at(0) == 2);

    auto evens = harness::OracleSet::rule("evens", [](std::uint64_t n) { return n % 2 == 0; });
    CHECK(evens.member(4));
    CHECK_FALSE(evens.member(5));
    CHECK(*evens.member_at(0) == 2);
    CHECK(*evens.member_at(2) == 6);
}

TEST_CASE("cached oracle is parsimonious") {
    auto oracle = finite_oracle({1, 2, 3});
    harness::CachedOracle cache(oracle);
    for (int r = 0; r < 10; ++r) {
        cache.member(1);
        cache.member(4);
    }
    CHECK(oracle->query_count() == 2);
}

TEST_CASE("elliptic fiber family basics") {
    auto fam = elliptic_fiber_family();
    auto v3 = fam.builder(3);
    // the fiber passes through (0, sqrt 3, 3)
    auto p = fam.point_gen(3, 0);
    REQUIRE(p.has_value());
    CHECK(p->coords[0] == FieldElement(0));
    CHECK(p->coords[1] * p->coords[1] == FieldElement(3));
    for (const auto& g : v3.defining_ideal().generators())
        CHECK(g.evaluate(p->coords).is_zero());
    CHECK(*fam.chi(*p) == 3);

    // points at different stream slots are distinct (distinct x)
    auto q = fam.point_gen(3, 5);
    REQUIRE(q.has_value());
    CHECK_FALSE(q->coords[0] == p->coords[0]);
}

TEST_CASE("structure point enumeration covers exactly the index set") {
    auto fam = elliptic_fiber_family();
    UnionStructure ax(fam, finite_oracle({1, 3}), UnionMode::subspaces_of_fixed_z);
    std::set<unsigned> seen;
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto p = ax.point_at(i);
        REQUIRE(p.has_value());
        auto c = fam.chi(*p);
        REQUIRE(c.has_value());
        seen.insert(*c);
    }
    CHECK(seen == std::set<unsigned>{1, 3});
}

TEST_CASE("empty oracle gives the empty structure") {
    auto fam = elliptic_fiber_family();
    UnionStructure ax(fam, finite_oracle({}), UnionMode::subspaces_of_fixed_z);
    CHECK_FALSE(ax.point_at(0).has_value());
}

TEST_CASE("superelliptic streams exhaust but the union still enumerates") {
    auto fam = superelliptic_family();
    UnionStructure ax(fam, finite_oracle({2, 4}), UnionMode::subspaces_of_fixed_z);
    std::vector<PointOnVariety> pts;
    for (std::uint64_t i = 0; i < 8; ++i) {
        auto p = ax.point_at(i);
        if (!p) break;
        pts.push_back(*p);
    }
    CHECK(pts.size() == 4);  // two rational points per included component
    CHECK_FALSE(ax.point_at(4).has_value());
    auto set = enumerate_components(source_of(ax), fam, 100);
    CHECK(set == std::set<unsigned>{2, 4});
}

TEST_CASE("ideal of Y for finite and infinite index sets") {
    auto fam = elliptic_fiber_family();
    UnionStructure fin(fam, finite_oracle({1, 2}), UnionMode::subspaces_of_fixed_z);
    const auto& iy = fin.ideal_of_y();
    // (z-1)(z-2) vanishes on both fibers
    CHECK(ideal_member(P("x3^2 - 3*x3 + 2", 3), iy));
    // z-1 does not vanish on fiber 2
    CHECK_FALSE(ideal_member(P("x3 - 1", 3), iy));
    // the surface equation is in I(Y)
    CHECK(ideal_member(P("x2^2 - x1^3 - x1 - x3", 3), iy));

    auto evens = std::make_shared<harness::OracleSet>(
        harness::OracleSet::rule("evens", [](std::uint64_t n) { return n % 2 == 0; }));
    UnionStructure inf(fam, evens, UnionMode::subspaces_of_fixed_z);
    // I(Y) collapses to I(V): only the surface relation survives
    CHECK(inf.ideal_of_y().groebner() ==
          fam.ambient->defining_ideal().groebner());
}

TEST_CASE("weak open checks") {
    auto fam = elliptic_fiber_family();
    UnionStructure ax(fam, finite_oracle({1, 2, 3}), UnionMode::subspaces_of_fixed_z);

    // cofinite opens meet every (infinite) component
    WeakOpen cof{ZOpen::cofinite({*fam.point_gen(1, 0)}), {}};
    CHECK(weak_open_check(cof, ax, {1, 2, 3}));

    // complement of a whole included fiber misses it
    WeakOpen bad{ZOpen::zariski(IdealPresentation(3, {P("x3 - 2", 3)})), {}};
    CHECK_FALSE(weak_open_check(bad, ax, {1, 2, 3}));
    // probing only other components does not see the violation
    CHECK(weak_open_check(bad, ax, {1, 3}));

    // a proper Zariski open still meeting all fibers
    WeakOpen ok{ZOpen::zariski(IdealPresentation(3, {P("x1", 3)})), {}};
    CHECK(weak_open_check(ok, ax, {1, 2, 3}));
}

TEST_CASE("intersections of weak opens stay weak (irreducible components)") {
    // no component has two nonempty relative opens with empty meet, so the
    // descriptor intersection of two passing opens passes too
    auto fam = elliptic_fiber_family();
    UnionStructure ax(fam, finite_oracle({1, 2, 3}), UnionMode::subspaces_of_fixed_z);
    std::vector<unsigned> probes{1, 2, 3};
    std::vector<ZOpen> opens{
        ZOpen::zariski(IdealPresentation(3, {P("x1", 3)})),
        ZOpen::zariski(IdealPresentation(3, {P("x1 - 1", 3)})),
        ZOpen::zariski(IdealPresentation(3, {P("x2 - 1", 3)})),
    };
    for (std::size_t i = 0; i < opens.size(); ++i) {
        REQUIRE(weak_open_check({opens[i], {}}, ax, probes));
        for (std::size_t k = 0; k < opens.size(); ++k) {
            // intersection of Zariski opens: complement = product ideal
            ZOpen meet = ZOpen::zariski(
                ideal_product(opens[i].complement_ideal, opens[k].complement_ideal));
            CHECK(weak_open_check({meet, {}}, ax, probes));
        }
    }
    // cofinite meets cofinite the same way
    ZOpen c1 = ZOpen::cofinite({*fam.point_gen(1, 0)});
    ZOpen c2 = ZOpen::cofinite({*fam.point_gen(2, 0), *fam.point_gen(1, 1)});
    std::vector<PointOnVariety> both = c1.excluded;
    for (const auto& p : c2.excluded) both.push_back(p);
    CHECK(weak_open_check({ZOpen::cofinite(both), {}}, ax, probes));
}

TEST_CASE("weak opens in disjoint mode need nonempty exceptions") {
    auto fam = disjoint_elliptic_family();
    UnionStructure w(fam, finite_oracle({1, 2, 3}), UnionMode::disjoint_spaces);
    WeakOpen u{ZOpen::whole(), {{2, ZOpen::zariski(IdealPresentation(3, {P("x1 - 1", 3)}))}}};
    CHECK(weak_open_check(u, w, {1, 2, 3}));
    // exception equal to the whole component is empty, hence invalid
    WeakOpen empty_exc{ZOpen::whole(),
                       {{2, ZOpen::zariski(IdealPresentation(3, {P("x3 - 2", 3)}))}}};
    CHECK_FALSE(weak_open_check(empty_exc, w, {1, 2, 3}));
}

TEST_CASE("section membership in quotient rings (finite index set)") {
    auto fam = elliptic_fiber_family();
    UnionStructure ax(fam, finite_oracle({1, 3}), UnionMode::subspaces_of_fixed_z);

    // a global polynomial is a section over any open
    WeakOpen whole{ZOpen::whole(), {}};
    CHECK(union_section_member(Fraction::parse("x1 + x3", 3), whole, ax));

    // 1/(x3 - 2) is regular on both included fibers
    CHECK(union_section_member(Fraction(P("1", 3), P("x3 - 2", 3)), whole, ax));

    // 1/(x3 - 3) blows up on the included fiber 3
    CHECK_FALSE(union_section_member(Fraction(P("1", 3), P("x3 - 3", 3)), whole, ax));

    // 1/x1 blows up at points with x1 = 0 on every fiber
    CHECK_FALSE(union_section_member(Fraction(P("1", 3), P("x1", 3)), whole, ax));
    // but is a section over the open excluding V(x1)
    WeakOpen avoid_x{ZOpen::zariski(IdealPresentation(3, {P("x1", 3)})), {}};
    CHECK(union_section_member(Fraction(P("1", 3), P("x1", 3)), avoid_x, ax));

    // representatives differing by an element of I(Y): both or neither
    Fraction f(P("1", 3), P("x3 - 2", 3));
    Fraction h = Fraction::from_polynomial(P("x3^2 - 4*x3 + 3", 3));  // (z-1)(z-3) in I(Y)
    CHECK(union_section_member(f, whole, ax) == union_section_member(f + h, whole, ax));
    Fraction g(P("1", 3), P("x3 - 3", 3));
    CHECK(union_section_member(g, whole, ax) == union_section_member(g + h, whole, ax));
}

TEST_CASE("section membership with an infinite index set") {
    auto fam = elliptic_fiber_family();
    auto evens = std::make_shared<harness::OracleSet>(
        harness::OracleSet::rule("evens", [](std::uint64_t n) { return n % 2 == 0; }));
    UnionStructure ax(fam, evens, UnionMode::subspaces_of_fixed_z);
    WeakOpen whole{ZOpen::whole(), {}};

    CHECK(union_section_member(Fraction::parse("x1*x2 + 5", 3), whole, ax));
    // 1/(x3-4) blows up on the included fiber 4
    CHECK_FALSE(union_section_member(Fraction(P("1", 3), P("x3 - 4", 3)), whole, ax));
    // 1/(x3-5): fiber 5 is odd, not included
    CHECK(union_section_member(Fraction(P("1", 3), P("x3 - 5", 3)), whole, ax));
    // 1/(x3-1/2): no fiber at all over 1/2
    CHECK(union_section_member(Fraction(P("2", 3), P("2*x3 - 1", 3)), whole, ax));
    // 1/x1 blocks cofinitely many fibers
    CHECK_FALSE(union_section_member(Fraction(P("1", 3), P("x1", 3)), whole, ax));
    // ... unless the open excludes V(x1) entirely
    WeakOpen avoid_x{ZOpen::zariski(IdealPresentation(3, {P("x1", 3)})), {}};
    CHECK(union_section_member(Fraction(P("1", 3), P("x1", 3)), avoid_x, ax));
    // mixed blocking locus: x1*(x3-4) with x1 excised still blocks fiber 4
    CHECK_FALSE(union_section_member(Fraction(P("1", 3), P("x1^2*x3 - 4*x1^2", 3)), avoid_x, ax));
    // same denominator but fiber 5 instead: odd, so fine
    CHECK(union_section_member(Fraction(P("1", 3), P("x1^2*x3 - 5*x1^2", 3)), avoid_x, ax));
}

TEST_CASE("tuple sections for disjoint unions") {
    auto fam = disjoint_elliptic_family();
    UnionStructure w(fam, finite_oracle({1, 2}), UnionMode::disjoint_spaces);
    WeakOpen whole{ZOpen::whole(), {}};
    TupleSection ok{FieldElement(3), {{1, Fraction(P("1", 3), P("x3 - 2", 3))}}};
    CHECK(union_section_member(ok, whole, w));
    TupleSection bad{FieldElement(3), {{1, Fraction(P("1", 3), P("x3 - 1", 3))}}};
    CHECK_FALSE(union_section_member(bad, whole, w));
}

TEST_CASE("decide pair and enumerate under permutations") {
    auto fam = elliptic_fiber_family();
    UnionStructure ax(fam, finite_oracle({1, 3}), UnionMode::subspaces_of_fixed_z);

    CHECK(decide_pair(source_of(ax), 1, 2, fam) == 1);
    CHECK(decide_pair(source_of(ax), 2, 3, fam) == 3);

    // a simple in-block renaming of the copy's points
    std::mt19937_64 rng(42);
    std::vector<std::uint64_t> perm(64);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    PointSource permuted = [&ax, &perm](std::uint64_t idx) {
        return ax.point_at(idx < perm.size() ? perm[idx] : idx);
    };
    CHECK(decide_pair(permuted, 1, 2, fam) == 1);
    CHECK(decide_pair(permuted, 2, 3, fam) == 3);
    CHECK(enumerate_components(permuted, fam, 64) == std::set<unsigned>{1, 3});

    UnionStructure empty(fam, finite_oracle({}), UnionMode::subspaces_of_fixed_z);
    CHECK(enumerate_components(source_of(empty), fam, 50).empty());
    CHECK_THROWS_AS(decide_pair(source_of(empty), 1, 2, fam), std::runtime_error);
}

TEST_CASE("morphism checks") {
    auto fam = elliptic_fiber_family();
    UnionStructure ax(fam, finite_oracle({1, 2}), UnionMode::subspaces_of_fixed_z);

    MorphismProbe probe;
    for (std::uint64_t i = 0; i < 10; ++i) {
        auto p = ax.point_at(i);
        REQUIRE(p.has_value());
        probe.points.push_back(*p);
    }
    probe.sections.push_back(Fraction::parse("x1 + x3", 3));
    probe.sections.push_back(Fraction(P("x2", 3), P("x3 + 7", 3)));
    probe.coordinate_map = std::vector<SparsePolynomial>{P("x1", 3), P("x2", 3), P("x3", 3)};

    auto identity = [](const PointOnVariety& p) { return p; };
    CHECK(union_morphism_check(ax, ax, identity, probe));

    // a map that splits component 1 across two targets on probes
    auto splitter = [&fam](const PointOnVariety& p) {
        if (p.coords[0] == FieldElement(0) && p.coords[2] == FieldElement(1))
            return *fam.point_gen(2, 0);
        return p;
    };
    MorphismProbe split_probe = probe;
    split_probe.coordinate_map.reset();
    CHECK_FALSE(union_morphism_check(ax, ax, splitter, split_probe));

    // a map landing outside the included index set
    UnionStructure small(fam, finite_oracle({1}), UnionMode::subspaces_of_fixed_z);
    MorphismProbe p1;
    p1.points.push_back(*fam.point_gen(2, 0));
    auto ident = [](const PointOnVariety& p) { return p; };
    CHECK_FALSE(union_morphism_check(small, small, ident, p1));
}

TEST_CASE("rigidity certificates") {
    auto fam = elliptic_fiber_family();
    auto rep = rigidity_certify(fam, 20);
    CHECK(rep.pass);
    CHECK(rep.kind == RigidityKind::distinct_j_invariant);

    auto sup = superelliptic_family();
    auto rep2 = rigidity_certify(sup, 10);
    CHECK(rep2.pass);
    CHECK(rep2.kind == RigidityKind::distinct_genus);

    // duplicated invariant must fail with the colliding pair
    ComponentFamily dup = fam;
    dup.invariant = [](unsigned i) { return std::string(i <= 2 ? "same" : "other"); };
    auto rep3 = rigidity_certify(dup, 3);
    CHECK_FALSE(rep3.pass);
    REQUIRE(rep3.collision.has_value());
    CHECK(rep3.collision->first == 1);
    CHECK(rep3.collision->second == 2);
}

TEST_CASE("appendix family plugs into the union machinery") {
    auto state = curves::appendix_A_sequence(3);
    auto fam = appendix_family(state);
    auto rep = rigidity_certify(fam, 3);
    CHECK(rep.pass);
    CHECK(rep.kind == RigidityKind::distinct_bad_primes);

    UnionStructure ax(fam, finite_oracle({1, 3}), UnionMode::disjoint_spaces);
    auto set = enumerate_components(source_of(ax), fam, 30);
    CHECK(set == std::set<unsigned>{1, 3});
    CHECK(decide_pair(source_of(ax), 3, 2, fam) == 3);
}

TEST_CASE("point vanishing ideals") {
    // rational point
    PointOnVariety p{{FieldElement(1), FieldElement(2)}};
    auto ideal = point_vanishing_ideal(p, 2);
    CHECK(ideal_member(P("x1 - 1", 2), ideal));
    CHECK(ideal_member(P("x2 - 2", 2), ideal));
    CHECK_FALSE(ideal_member(P("x1 - 2", 2), ideal));

    // quadratic point (0, sqrt 3): the orbit ideal is <x1, x2^2 - 3>
    PointOnVariety q{{FieldElement(0), curves::sqrt_element(Rat(3))}};
    auto orbit = point_vanishing_ideal(q, 2);
    CHECK(ideal_member(P("x1", 2), orbit));
    CHECK(ideal_member(P("x2^2 - 3", 2), orbit));
    CHECK_FALSE(ideal_member(P("x2 - 3", 2), orbit));
}
