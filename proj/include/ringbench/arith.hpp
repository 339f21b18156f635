#pragma once

// Exact integer and rational arithmetic utilities on top of GMP.
// Everything here is deterministic: factorization uses trial division
// followed by Brent-cycle rho with a fixed parameter schedule, and
// primality testing uses a fixed base set.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringbench::exactalg {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational: lowest terms, positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return q;
}

std::string int_to_string(const Int& n);
std::string rat_to_string(const Rat& q);

/// Strong probable-prime test with the fixed base set {2,...,37}.
/// Deterministic for n < 3.3e24; a fixed-base certification beyond.
bool is_prime(const Int& n);

/// Exponent of p in n (n != 0, p >= 2).
unsigned multiplicity(Int n, const Int& p);

/// Full factorization, prime -> exponent. Trial division to 2^20, then
/// deterministic Brent rho on remaining composites.
std::map<Int, unsigned> factorize(const Int& n);

/// Divisors of |n| in increasing order (n != 0). Desk scale only.
std::vector<Int> divisors(const Int& n);

/// The k-th rational prime, 1-based: 1 -> 2, 2 -> 3, 3 -> 5, ...
Int nth_prime(std::uint64_t k);

/// Exact square root if n is a perfect square.
std::optional<Int> perfect_sqrt(const Int& n);

/// Exact square root of a nonnegative rational, if it exists.
std::optional<Rat> rat_sqrt(const Rat& q);

/// x with x == r_i mod m_i for pairwise coprime moduli; least nonnegative.
Int crt(const std::vector<std::pair<Int, Int>>& congruences);

/// Modular inverse; throws if gcd(a, m) != 1.
Int inv_mod(const Int& a, const Int& m);

/// Smallest z in [0, p) with z^3 = a mod p, if any.
std::optional<Int> cube_root_mod(const Int& a, const Int& p);

/// Cantor pairing on unsigned 64-bit ids, and its inverse.
std::uint64_t pair64(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> unpair64(std::uint64_t z);

}  // namespace ringbench::exactalg
