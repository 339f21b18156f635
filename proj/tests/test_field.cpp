#include "doctest.h"

#include "ringbench/field.hpp"

using namespace ringbench::exactalg;

namespace {
ExtensionHandle sqrt2() {
    // t^2 - 2
    return std::make_shared<ExtensionDescriptor>(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
}
}  // namespace

TEST_CASE("rational field arithmetic") {
    FieldElement a(make_rat(1, 2)), b(make_rat(1, 3));
    CHECK((a + b) == FieldElement(make_rat(5, 6)));
    CHECK((a * b) == FieldElement(make_rat(1, 6)));
    CHECK((a - b) == FieldElement(make_rat(1, 6)));
    CHECK((a / b) == FieldElement(make_rat(3, 2)));
    CHECK(FieldElement(make_rat(2, 4)) == FieldElement(make_rat(1, 2)));
    CHECK_THROWS_AS(a / FieldElement(0), std::domain_error);
}

TEST_CASE("extension arithmetic reduces by the minimal polynomial") {
    auto ext = sqrt2();
    FieldElement alpha = FieldElement::generator(ext);
    CHECK((alpha * alpha) == FieldElement(2));

    // (1 + alpha)(1 - alpha) = 1 - 2 = -1
    FieldElement one(1);
    CHECK((one + alpha) * (one - alpha) == FieldElement(-1));

    // 1/alpha = alpha/2
    CHECK(alpha.inverse() == alpha * FieldElement(make_rat(1, 2)));
    CHECK(alpha.inverse() * alpha == one);
}

TEST_CASE("mixed descriptors are rejected, rationals embed") {
    auto e1 = sqrt2();
    auto e2 = std::make_shared<ExtensionDescriptor>(std::vector<Rat>{Rat(-3), Rat(0), Rat(1)});
    FieldElement a = FieldElement::generator(e1);
    FieldElement b = FieldElement::generator(e2);
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK((a + FieldElement(1)) - FieldElement(1) == a);
}

TEST_CASE("irreducibility certification") {
    CHECK(univariate_irreducible_over_Q({Rat(-2), Rat(0), Rat(1)}));        // t^2-2
    CHECK(univariate_irreducible_over_Q({Rat(1), Rat(0), Rat(1)}));         // t^2+1
    CHECK(univariate_irreducible_over_Q({Rat(-2), Rat(0), Rat(0), Rat(1)}));  // t^3-2
    CHECK_FALSE(univariate_irreducible_over_Q({Rat(-1), Rat(0), Rat(1)}));  // (t-1)(t+1)
    // (t^2+1)(t^2+2) = t^4 + 3t^2 + 2 has no rational roots but factors
    CHECK_FALSE(univariate_irreducible_over_Q({Rat(2), Rat(0), Rat(3), Rat(0), Rat(1)}));
    CHECK_THROWS_AS(ExtensionDescriptor({Rat(-1), Rat(0), Rat(1)}), std::domain_error);
    CHECK_THROWS_AS(ExtensionDescriptor({Rat(-2), Rat(0), Rat(2)}), std::domain_error);  // not monic
}

TEST_CASE("field enumeration is the documented zig-zag") {
    // golden prefix: 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3/2, ...
    CHECK(field_enumerate_rational(1) == Rat(0));
    CHECK(field_enumerate_rational(2) == Rat(1));
    CHECK(field_enumerate_rational(3) == Rat(-1));
    CHECK(field_enumerate_rational(4) == make_rat(1, 2));
    CHECK(field_enumerate_rational(5) == make_rat(-1, 2));
    CHECK(field_enumerate_rational(6) == Rat(2));
    CHECK(field_enumerate_rational(8) == make_rat(1, 3));
    CHECK(field_enumerate_rational(10) == make_rat(3, 2));
    CHECK_THROWS_AS(field_enumerate_rational(0), std::domain_error);
}

TEST_CASE("field enumeration hits every small rational exactly once") {
    std::vector<Rat> seen;
    for (std::uint64_t i = 1; i <= 400; ++i) seen.push_back(field_enumerate_rational(i));
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
    // every rational with |num|,den <= 5 appears in a long enough prefix
    std::vector<Rat> small;
    for (int n = -5; n <= 5; ++n)
        for (int d = 1; d <= 5; ++d) small.push_back(make_rat(n, d));
    std::sort(small.begin(), small.end());
    small.erase(std::unique(small.begin(), small.end()), small.end());
    std::vector<Rat> big;
    for (std::uint64_t i = 1; i <= 200; ++i) big.push_back(field_enumerate_rational(i));
    for (const Rat& q : small)
        CHECK(std::find(big.begin(), big.end(), q) != big.end());
}

TEST_CASE("sequential enumerator matches the pure function") {
    FieldEnumerator e;
    for (std::uint64_t i = 1; i <= 64; ++i) CHECK(e.next() == field_enumerate_rational(i));
}

TEST_CASE("extension enumeration is repeatable and spreads coordinates") {
    auto ext = sqrt2();
    for (std::uint64_t i = 1; i <= 64; ++i)
        CHECK(field_enumerate(i, ext) == field_enumerate(i, ext));
    bool saw_nonrational = false;
    for (std::uint64_t i = 1; i <= 64; ++i)
        if (!field_enumerate(i, ext).is_rational()) saw_nonrational = true;
    CHECK(saw_nonrational);
}

TEST_CASE("canonical text of field elements") {
    CHECK(FieldElement(make_rat(-3, 2)).to_string() == "-3/2");
    auto ext = sqrt2();
    FieldElement alpha = FieldElement::generator(ext);
    CHECK(alpha.to_string() == "(t)");
    CHECK((alpha * FieldElement(3) + FieldElement(make_rat(1, 2))).to_string() == "(1/2 + 3*t)");
    CHECK(ext->min_poly_text() == "t^2 - 2");
}
