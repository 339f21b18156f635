#include "ringbench/curves.hpp"

#include <algorithm>
#include <sstream>

namespace ringbench::curves {

using namespace exactalg;

WeierstrassInvariants weierstrass_invariants(const FieldElement& a, const FieldElement& b) {
    FieldElement four_a3 = a * a * a * FieldElement(4);
    FieldElement core = four_a3 + b * b * FieldElement(27);  // 4A^3 + 27B^2
    WeierstrassInvariants inv;
    inv.discriminant = core * FieldElement(-16);
    if (!core.is_zero()) inv.j = four_a3 * FieldElement(1728) / core;
    return inv;
}

WeierstrassCurve::WeierstrassCurve(FieldElement a, FieldElement b)
    : a_(std::move(a)), b_(std::move(b)) {
    auto inv = weierstrass_invariants(a_, b_);
    if (!inv.j) throw std::domain_error("singular Weierstrass equation");
    disc_ = inv.discriminant;
    j_ = *inv.j;
}

std::vector<WeierstrassCurve> elliptic_family_gen(unsigned count) {
    if (count == 0) throw std::domain_error("family size must be positive");
    std::vector<WeierstrassCurve> out;
    std::vector<FieldElement> seen_j;
    for (unsigned n = 1; out.size() < count; ++n) {
        auto inv = weierstrass_invariants(FieldElement(1), FieldElement((long)n));
        if (!inv.j) continue;  // singular fiber, skipped
        bool fresh = std::none_of(seen_j.begin(), seen_j.end(),
                                  [&](const FieldElement& j) { return j == *inv.j; });
        if (!fresh) continue;
        seen_j.push_back(*inv.j);
        out.emplace_back(FieldElement(1), FieldElement((long)n));
    }
    return out;
}

FieldElement sqrt_element(const Rat& v) {
    if (auto r = rat_sqrt(v)) return FieldElement(*r);
    // t^2 - v is irreducible exactly because v is not a square
    auto ext = std::make_shared<ExtensionDescriptor>(std::vector<Rat>{Rat(-v), Rat(0), Rat(1)});
    return FieldElement::generator(ext);
}

unsigned superelliptic_genus(unsigned d) {
    if (d < 3 || d % 2 == 0) throw std::domain_error("d must be odd and at least 3");
    // three tame totally ramified points, different degree 3(d-1):
    // 2g - 2 = -2d + 3(d-1) so g = (d-1)/2
    return (d - 1) / 2;
}

std::vector<SuperellipticCurve> superelliptic_family_gen(unsigned count) {
    std::vector<SuperellipticCurve> out;
    for (unsigned n = 1; n <= count; ++n) {
        unsigned d = 2 * n + 1;
        out.push_back({d, superelliptic_genus(d)});
    }
    return out;
}

std::vector<Int> appendix_prime_list(unsigned count) {
    std::vector<Int> out;
    Int p = 3;
    while (out.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (cube_root_mod(4, p)) out.push_back(p);
    }
    return out;
}

void appendix_absorb(AppendixFamilyState& state, std::size_t upto) {
    if (upto > state.curves.size()) throw std::domain_error("absorb beyond the prefix");
    for (; state.absorbed < upto; ++state.absorbed) {
        AppendixCurve& c = state.curves[state.absorbed];
        c.bad_primes.clear();
        for (const auto& [p, e] : factorize(c.value)) {
            c.bad_primes.push_back(p);
            state.g_set.insert(p);
        }
    }
}

AppendixFamilyState appendix_A_sequence(unsigned count, AppendixFamilyState state) {
    while (state.curves.size() < count) {
        appendix_absorb(state, state.curves.size());
        // witness: the first listed prime not in G(k)
        Int witness = 0, root = 0;
        std::size_t scan = 0;
        while (witness == 0) {
            if (scan == state.prime_list.size()) {
                auto more = appendix_prime_list(
                    static_cast<unsigned>(state.prime_list.size() + 4));
                state.prime_list = std::move(more);
            }
            const Int& cand = state.prime_list[scan++];
            if (!state.g_set.count(cand)) {
                witness = cand;
                root = *cube_root_mod(4, cand);
            }
        }
        Int h = 1;
        for (const Int& p : state.g_set) h *= p;
        Int target = (-3 * inv_mod(root, witness) % witness + witness) % witness;
        std::vector<std::pair<Int, Int>> congruences{{Int(1), Int(3)}, {target, witness}};
        if (h > 1) congruences.push_back({Int(0), h});
        Int a = crt(congruences);
        if (a == 0) throw std::logic_error("congruence target collapsed to zero");
        Int value = 4 * a * a * a + 27;

        // re-verify the order conditions on the fresh value
        Int six_gcd;
        {
            Int six = 6;
            mpz_gcd(six_gcd.get_mpz_t(), value.get_mpz_t(), six.get_mpz_t());
        }
        if (six_gcd != 1) throw std::logic_error("4A^3+27 not coprime to 6");
        for (const Int& p : state.g_set)
            if (value % p == 0) throw std::logic_error("order positive on G(k)");
        if (value % witness != 0) throw std::logic_error("order zero at the witness prime");

        AppendixCurve curve;
        curve.witness_prime = witness;
        curve.cube_root = root;
        curve.a_value = a;
        curve.value = value;
        state.curves.push_back(std::move(curve));
    }
    return state;
}

DisjointnessReport reduction_disjointness(const AppendixFamilyState& state, unsigned prefix) {
    DisjointnessReport report;
    if (prefix > state.curves.size())
        throw std::domain_error("prefix longer than the generated family");
    for (unsigned i = 0; i < prefix; ++i) {
        const AppendixCurve& ci = state.curves[i];
        if (ci.value % ci.witness_prime != 0) {
            report.pass = false;
            std::ostringstream os;
            os << "witness " << ci.witness_prime << " does not divide value of curve "
               << (i + 1);
            report.detail = os.str();
            return report;
        }
        for (unsigned k = 0; k < prefix; ++k) {
            if (k == i) continue;
            if (state.curves[k].value % ci.witness_prime == 0) {
                report.pass = false;
                std::ostringstream os;
                os << "witness prime " << ci.witness_prime << " of curve " << (i + 1)
                   << " also divides the value of curve " << (k + 1);
                report.detail = os.str();
                return report;
            }
        }
    }
    report.detail = "pairwise distinct bad-prime witnesses";
    return report;
}

}  // namespace ringbench::curves
