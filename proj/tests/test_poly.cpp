#include "doctest.h"

#include "ringbench/poly.hpp"

using namespace ringbench::exactalg;

namespace {
SparsePolynomial P(const std::string& s, unsigned nvars,
                   MonomialOrder o = MonomialOrder::grevlex) {
    return SparsePolynomial::parse(s, nvars, o);
}
}  // namespace

TEST_CASE("monomial orders") {
    // grevlex on 3 variables: x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
    Exponents x1x3{1, 0, 1}, x2sq{0, 2, 0}, x1x2{1, 1, 0};
    CHECK(compare_monomials(x2sq, x1x3, MonomialOrder::grevlex) > 0);
    CHECK(compare_monomials(x1x2, x2sq, MonomialOrder::grevlex) > 0);
    CHECK(compare_monomials(x1x3, x2sq, MonomialOrder::lex) > 0);
    // degree dominates in grevlex
    CHECK(compare_monomials({0, 0, 3}, {1, 1, 0}, MonomialOrder::grevlex) > 0);
    CHECK(compare_monomials({0, 0, 3}, {1, 1, 0}, MonomialOrder::lex) < 0);
}

TEST_CASE("arithmetic and normalization") {
    auto f = P("x1^2 - x2^2", 2);
    auto g = P("x1 - x2", 2);
    auto h = P("x1 + x2", 2);
    CHECK(f == g * h);
    CHECK((f - f).is_zero());
    CHECK((g + (-g)).is_zero());
    CHECK(f.total_degree() == 2);
    CHECK(f.degree_in(0) == 2);
}

TEST_CASE("canonical text round trips") {
    for (std::string s : {"3/2*x1^2*x2 - 7", "x1 - x2", "0", "-x1 + 1/3",
                          "x1^3 + x1*x2*x3 - 5/2*x3^2", "42"}) {
        auto p = P(s, 3);
        CHECK(p.to_string() == s);
        CHECK(P(p.to_string(), 3) == p);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(P("x0", 2), std::invalid_argument);
    CHECK_THROWS_AS(P("x3", 2), std::invalid_argument);
    CHECK_THROWS_AS(P("1 +", 2), std::invalid_argument);
    CHECK_THROWS_AS(P("x1 x2", 2), std::invalid_argument);
    CHECK_THROWS_AS(P("", 2), std::invalid_argument);
}

TEST_CASE("substitution and evaluation") {
    auto f = P("x1^2 + x2", 2);
    CHECK(f.evaluate({FieldElement(3), FieldElement(4)}) == FieldElement(13));
    auto sub = f.substitute({P("x1 + x2", 2), P("x1*x2", 2)});
    CHECK(sub == P("x1^2 + 2*x1*x2 + x2^2 + x1*x2", 2));
    CHECK(f.substitute_variable(1, FieldElement(5)) == P("x1^2 + 5", 2));
}

TEST_CASE("embedding and dropping variables") {
    auto f = P("x1*x2 - 1", 2);
    auto g = f.embedded(3, 1);  // x1 -> x2, x2 -> x3
    CHECK(g == P("x2*x3 - 1", 3));
    CHECK(g.dropped_variable(0) == f);
    CHECK_THROWS_AS(g.dropped_variable(1), std::domain_error);
}

TEST_CASE("extension coefficients print and parse") {
    auto ext = std::make_shared<ExtensionDescriptor>(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
    FieldElement alpha = FieldElement::generator(ext);
    SparsePolynomial p = SparsePolynomial::variable(1, 0) * alpha +
                         SparsePolynomial::constant(1, FieldElement(1));
    std::string text = p.to_string();
    CHECK(text == "(t)*x1 + 1");
    CHECK(SparsePolynomial::parse(text, 1, MonomialOrder::grevlex, ext) == p);
}

TEST_CASE("monomial enumeration up to degree") {
    auto ms = monomials_up_to_degree(2, 2);
    CHECK(ms.size() == 6);  // 1, x1, x2, x1^2, x1x2, x2^2
    auto m3 = monomials_up_to_degree(3, 4);
    CHECK(m3.size() == 35);  // C(7,3)
}

TEST_CASE("univariate helpers") {
    auto p = P("x1^2 - 1", 1);
    auto dense = dense_univariate(p);
    REQUIRE(dense.size() == 3);
    CHECK(dense[0] == FieldElement(-1));
    CHECK(dense[2] == FieldElement(1));
    CHECK(from_dense_univariate(dense) == p);

    // gcd((x-1)(x-2), (x-1)(x-3)) = x-1 (monic)
    std::vector<Rat> a{Rat(2), Rat(-3), Rat(1)};
    std::vector<Rat> b{Rat(3), Rat(-4), Rat(1)};
    auto g = univariate_gcd_q(a, b);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == Rat(-1));
    CHECK(g[1] == Rat(1));
}
