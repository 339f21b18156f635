#include "doctest.h"

#include "ringbench/arith.hpp"

using namespace ringbench::exactalg;

TEST_CASE("primality and factorization") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(41)));
    CHECK(is_prime(Int("85433534900957")));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(8815)));

    auto fs = factorize(Int(8815));
    REQUIRE(fs.size() == 3);
    CHECK(fs[Int(5)] == 1);
    CHECK(fs[Int(41)] == 1);
    CHECK(fs[Int(43)] == 1);

    CHECK(multiplicity(Int(8815), Int(5)) == 1);
    CHECK(multiplicity(Int(50), Int(5)) == 2);
}

TEST_CASE("factorization reaches past trial division") {
    // product of two primes above the trial-division bound
    Int a("1000003"), b("10000019");
    auto fs = factorize(a * b * b);
    CHECK(fs[a] == 1);
    CHECK(fs[b] == 2);
}

TEST_CASE("nth prime and crt") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(3) == 5);
    CHECK(nth_prime(5) == 11);

    Int x = crt({{Int(1), Int(3)}, {Int(3), Int(5)}});
    CHECK(x == 13);
}

TEST_CASE("cube roots mod p") {
    auto r5 = cube_root_mod(4, 5);
    REQUIRE(r5.has_value());
    CHECK(*r5 * *r5 % 5 * *r5 % 5 == 4);
    CHECK_FALSE(cube_root_mod(4, 7).has_value());
    CHECK_FALSE(cube_root_mod(4, 13).has_value());
}

TEST_CASE("rational helpers") {
    CHECK(rat_to_string(make_rat(2, 4)) == "1/2");
    CHECK(rat_to_string(make_rat(-6, 3)) == "-2");
    CHECK(rat_from_string("3/9") == make_rat(1, 3));
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);

    CHECK(rat_sqrt(make_rat(9, 4)) == make_rat(3, 2));
    CHECK_FALSE(rat_sqrt(make_rat(2, 1)).has_value());
    CHECK_FALSE(rat_sqrt(make_rat(-1, 1)).has_value());
}

TEST_CASE("pairing round trip") {
    for (std::uint64_t z = 0; z < 500; ++z) {
        auto [a, b] = unpair64(z);
        CHECK(pair64(a, b) == z);
    }
    CHECK(pair64(0, 0) == 0);
}
