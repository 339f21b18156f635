#include "doctest.h"

#include "ringbench/geometry.hpp"

using namespace ringbench::exactalg;
using namespace ringbench::geometry;

namespace {

SparsePolynomial P(const std::string& s, unsigned nvars) {
    return SparsePolynomial::parse(s, nvars);
}

VarietyHandle V(std::initializer_list<std::string> gens, unsigned nvars) {
    std::vector<SparsePolynomial> v;
    for (const auto& s : gens) v.push_back(P(s, nvars));
    return std::make_shared<VarietyPresentation>(nvars, IdealPresentation(nvars, std::move(v)));
}

bool contains_point(const std::vector<PointOnVariety>& pts,
                    std::initializer_list<int> coords) {
    for (const auto& p : pts) {
        bool match = true;
        std::size_t i = 0;
        for (int c : coords) {
            if (p.coords[i] != FieldElement(c)) { match = false; break; }
            ++i;
        }
        if (match) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("fractions normalize and compare") {
    Fraction f(P("x1^2 - 1", 2), P("x1 - 1", 2));
    CHECK(f == Fraction::from_polynomial(P("x1 + 1", 2)));
    Fraction g(P("x1", 2), P("2*x2", 2));
    CHECK(g.den() == P("x2", 2));  // denominator scaled monic
    CHECK(g.num() == P("1/2*x1", 2));
    CHECK(Fraction::parse(g.to_string(), 2) == g);
    CHECK(g.to_string() == "1/2*x1 / x2");
}

TEST_CASE("fraction order at linear primes is representation independent") {
    Fraction a(P("x1 - 1", 2), P("x2", 2));
    Fraction b(P("x1^2 - 1", 2) * P("x2", 2), P("x2^2", 2) * P("x1 + 1", 2));
    CHECK(a == b);
    CHECK(a.order_at_linear(0, FieldElement(1)) == b.order_at_linear(0, FieldElement(1)));
    CHECK(a.order_at_linear(1, FieldElement(0)) == -1);
    CHECK(b.order_at_linear(1, FieldElement(0)) == -1);
}

TEST_CASE("linear factor extraction") {
    // (x1-1)(x2-2): factors in x1 -> {1}
    auto g = P("x1*x2 - 2*x1 - x2 + 2", 2);
    auto f1 = linear_factors_in_variable(g, 0);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == FieldElement(1));
    auto f2 = linear_factors_in_variable(g, 1);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0] == FieldElement(2));

    CHECK(linear_factors_in_variable(P("x1^2 + 1", 2), 0).empty());

    // (x1-3)^2*x2 + (x1-3)*x2^2 -> {3} in x1
    auto h = P("x1^2*x2 - 6*x1*x2 + 9*x2 + x1*x2^2 - 3*x2^2", 2);
    auto f3 = linear_factors_in_variable(h, 0);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0] == FieldElement(3));
}

TEST_CASE("variety presentations reject the unit ideal") {
    CHECK_THROWS_AS(VarietyPresentation(2, IdealPresentation(2, {P("1", 2)})),
                    std::domain_error);
    auto v = V({"x2 - x1^2"}, 2);
    CHECK(v->ambient_dimension() == 2);
}

TEST_CASE("point enumeration finds small points and is monotone") {
    auto v = V({"x2 - x1^2"}, 2);
    auto pts = variety_points_enumerate(*v, 200);
    CHECK(contains_point(pts, {0, 0}));
    CHECK(contains_point(pts, {1, 1}));
    CHECK(contains_point(pts, {-1, 1}));
    auto fewer = variety_points_enumerate(*v, 50);
    // monotone: every point found with the smaller budget appears again
    for (const auto& p : fewer) {
        bool found = false;
        for (const auto& q : pts)
            if (q.coords == p.coords) found = true;
        CHECK(found);
    }

    // no rational points on x^2 + 1 = 0
    auto empty = V({"x1^2 + 1"}, 1);
    CHECK(variety_points_enumerate(*empty, 300).empty());
}

TEST_CASE("points are validated") {
    auto v = V({"x2 - x1^2"}, 2);
    CHECK_NOTHROW(make_point(*v, {FieldElement(2), FieldElement(4)}));
    CHECK_THROWS_AS(make_point(*v, {FieldElement(2), FieldElement(5)}), std::domain_error);
}

TEST_CASE("definedness on opens") {
    auto line = V({}, 1);  // affine line
    RationalFunction inv_x(P("1", 1), P("x1", 1), line);
    // U^c = V(x): denominator zero locus inside U^c
    CHECK(fn_defined_on_open(inv_x, IdealPresentation(1, {P("x1", 1)})));
    // U^c = V(x-1): 1/x blows up at 0 which stays in U
    CHECK_FALSE(fn_defined_on_open(inv_x, IdealPresentation(1, {P("x1 - 1", 1)})));
}

TEST_CASE("definedness regression: radical succeeds where division fails") {
    auto parab = V({"x2 - x1^2"}, 2);
    RationalFunction f(P("1", 2), P("x2", 2), parab);
    IdealPresentation origin(2, {P("x1", 2), P("x2", 2)});
    CHECK_FALSE(fn_defined_division_test(f, origin));
    CHECK(fn_defined_on_open(f, origin));
}

TEST_CASE("division test is sound for the exact criterion") {
    auto parab = V({"x2 - x1^2"}, 2);
    std::vector<RationalFunction> fns;
    fns.emplace_back(P("1", 2), P("x2", 2), parab);
    fns.emplace_back(P("x1", 2), P("x1 - 1", 2), parab);
    fns.emplace_back(P("1", 2), P("x1*x2", 2), parab);
    std::vector<IdealPresentation> closed;
    closed.emplace_back(2, std::vector<SparsePolynomial>{P("x1", 2), P("x2", 2)});
    closed.emplace_back(2, std::vector<SparsePolynomial>{P("x1 - 1", 2), P("x2 - 1", 2)});
    closed.emplace_back(2, std::vector<SparsePolynomial>{P("x1*x2", 2)});
    for (const auto& f : fns)
        for (const auto& w : closed)
            if (fn_defined_division_test(f, w)) CHECK(fn_defined_on_open(f, w));
}

TEST_CASE("vanishing on closed sets") {
    auto plane = V({}, 2);
    RationalFunction x(P("x1", 2), P("1", 2), plane);
    CHECK(fn_vanishes_on_closed(x, IdealPresentation(2, {P("x1", 2)})));
    RationalFunction xm1(P("x1 - 1", 2), P("1", 2), plane);
    CHECK_FALSE(fn_vanishes_on_closed(xm1, IdealPresentation(2, {P("x1", 2)})));
    RationalFunction xy(P("x1*x2", 2), P("1", 2), plane);
    CHECK(fn_vanishes_on_closed(xy, IdealPresentation(2, {P("x1^2", 2)})));

    // denominator vanishing identically on W is a distinct error
    RationalFunction bad(P("1", 2), P("x2", 2), plane);
    CHECK_THROWS_AS(fn_vanishes_on_closed(bad, IdealPresentation(2, {P("x2", 2)})),
                    NowhereDefinedError);
}

TEST_CASE("constancy decisions") {
    auto parab = V({"x2 - x1^2"}, 2);
    RationalFunction f(P("x2", 2), P("x1^2", 2), parab);
    auto r = fn_is_constant(f, 300);
    REQUIRE(r.kind == ConstancyResult::Kind::constant);
    CHECK(*r.value == FieldElement(1));

    auto line = V({}, 1);
    RationalFunction x(P("x1", 1), P("1", 1), line);
    CHECK(fn_is_constant(x, 100).kind == ConstancyResult::Kind::nonconstant);

    RationalFunction five(P("5", 1), P("1", 1), line);
    auto rc = fn_is_constant(five, 100);
    REQUIRE(rc.kind == ConstancyResult::Kind::constant);
    CHECK(*rc.value == FieldElement(5));

    // no rational witness point at all -> inconclusive
    auto pointless = V({"x1^2 + 1"}, 1);
    RationalFunction g(P("x1", 1), P("1", 1), pointless);
    CHECK(fn_is_constant(g, 100).kind == ConstancyResult::Kind::inconclusive);
}

TEST_CASE("ideal of unions") {
    VarietyPresentation l1(2, IdealPresentation(2, {P("x1 - 1", 2)}));
    VarietyPresentation l2(2, IdealPresentation(2, {P("x1 - 2", 2)}));
    auto u = ideal_of_union({l1, l2}, false);
    CHECK(ideal_member(P("x1^2 - 3*x1 + 2", 2), u));
    CHECK_FALSE(ideal_member(P("x1 - 1", 2), u));

    auto single = ideal_of_union({l1}, false);
    CHECK(single.groebner() == l1.defining_ideal().groebner());

    auto empty = ideal_of_union({}, false, nullptr);
    CHECK(empty.contains_one());

    VarietyPresentation surface(3, IdealPresentation(3, {P("x2^2 - x1^3 - x1 - x3", 3)}));
    auto cof = ideal_of_union({}, true, &surface);
    CHECK(cof.groebner() == surface.defining_ideal().groebner());
}
