#pragma once

// Weierstrass invariants and the three curve families: elliptic fibers
// with pairwise distinct j-invariants, the superelliptic genus family,
// and the non-isogenous family built by congruence search.

#include "ringbench/field.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ringbench::curves {

using exactalg::FieldElement;
using exactalg::Int;
using exactalg::Rat;

struct WeierstrassInvariants {
    FieldElement discriminant;         // -16(4A^3 + 27B^2)
    std::optional<FieldElement> j;     // absent exactly when the curve is singular
};

WeierstrassInvariants weierstrass_invariants(const FieldElement& a, const FieldElement& b);

/// A nonsingular short-Weierstrass curve y^2 = x^3 + Ax + B.
class WeierstrassCurve {
  public:
    WeierstrassCurve(FieldElement a, FieldElement b);

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& discriminant() const { return disc_; }
    const FieldElement& j_invariant() const { return j_; }

  private:
    FieldElement a_, b_, disc_, j_;
};

/// The fibers y^2 = x^3 + x + n, n = 1..count, all nonsingular with
/// pairwise distinct j-invariants.
std::vector<WeierstrassCurve> elliptic_family_gen(unsigned count);

/// y with y^2 = v, as a rational when v is a square and as the generator
/// of the certified quadratic extension Q(sqrt v) otherwise.
FieldElement sqrt_element(const Rat& v);

/// Genus of y^d = (x+1)(x+2) for odd d >= 3.
unsigned superelliptic_genus(unsigned d);

struct SuperellipticCurve {
    unsigned d;
    unsigned genus;
};

/// d_n = 2n + 1 for n = 1..count.
std::vector<SuperellipticCurve> superelliptic_family_gen(unsigned count);

/// First count primes p not in {2,3} such that z^3 = 4 is solvable mod p,
/// in ascending order.
std::vector<Int> appendix_prime_list(unsigned count);

struct AppendixCurve {
    Int witness_prime;           // q_k: first listed prime outside G(k)
    Int cube_root;               // a cube root of 4 mod the witness prime
    Int a_value;                 // A_k
    Int value;                   // 4 A_k^3 + 27
    std::vector<Int> bad_primes; // prime factors of value, ascending; filled
                                 // once the value enters some G(k)
};

struct AppendixFamilyState {
    std::vector<Int> prime_list;       // listed primes generated so far
    std::vector<AppendixCurve> curves; // generated prefix
    std::set<Int> g_set;               // union of absorbed bad primes
    std::size_t absorbed = 0;          // curves whose values are in g_set
};

/// Factor the values of the first `upto` curves into g_set. Generation
/// calls this as needed; the tail value of a prefix is never factored.
void appendix_absorb(AppendixFamilyState& state, std::size_t upto);

/// Extend the state until `count` curves have been generated. Each new
/// A_k is the smallest positive integer with A_k = 1 mod 3, A_k = 0 mod
/// the product of G(k), and A_k = -3/(cbrt 4) mod the witness prime; the
/// order conditions (ord zero on G(k), positive at the witness, value
/// coprime to 6) are re-verified on every step.
AppendixFamilyState appendix_A_sequence(unsigned count, AppendixFamilyState state = {});

struct DisjointnessReport {
    bool pass = true;
    std::string detail;  // names the colliding pair and prime on failure
};

/// Pairwise-distinct bad-prime witnesses: q_i divides 4A_i^3+27 and no
/// other generated value. This is the rigidity certificate consumed by
/// the union construction.
DisjointnessReport reduction_disjointness(const AppendixFamilyState& state, unsigned prefix);

}  // namespace ringbench::curves
