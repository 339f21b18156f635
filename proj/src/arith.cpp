#include "ringbench/arith.hpp"

#include <algorithm>

namespace ringbench::exactalg {

std::string int_to_string(const Int& n) { return n.get_str(); }

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

const int kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool mr_witness(const Int& n, const Int& base, const Int& d, unsigned s) {
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

// Brent-cycle rho with deterministic schedule c = 1, 2, 3, ...
Int brent_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1;; ++c) {
        Int y = 2, g = 1, q = 1, x, ys;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    if (d < 0) d = -d;
                    q = q * d % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += batch;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int d = x - ys;
                if (d < 0) d = -d;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : kMrBases) {
        if (n % p == 0) return n == p;
    }
    Int d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (int b : kMrBases) {
        if (mr_witness(n, Int(b), d, s)) return false;
    }
    return true;
}

unsigned multiplicity(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("multiplicity of zero");
    if (p < 2) throw std::domain_error("multiplicity at non-prime");
    unsigned m = 0;
    while (n % p == 0) { n /= p; ++m; }
    return m;
}

std::map<Int, unsigned> factorize(const Int& n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    std::map<Int, unsigned> out;
    Int m = n < 0 ? Int(-n) : n;
    for (Int d = 2; d * d <= m && d < (1 << 20); d == 2 ? d = 3 : d += 2) {
        while (m % d == 0) { ++out[d]; m /= d; }
    }
    std::vector<Int> stack;
    if (m > 1) stack.push_back(m);
    while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_prime(v)) { ++out[v]; continue; }
        Int f = brent_rho(v);
        stack.push_back(f);
        stack.push_back(v / f);
    }
    return out;
}

std::vector<Int> divisors(const Int& n) {
    auto fs = factorize(n);
    std::vector<Int> out{1};
    for (const auto& [p, e] : fs) {
        std::vector<Int> next;
        Int pk = 1;
        for (unsigned i = 0; i <= e; ++i) {
            for (const Int& d : out) next.push_back(d * pk);
            pk *= p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int nth_prime(std::uint64_t k) {
    if (k == 0) throw std::domain_error("prime index is 1-based");
    Int p = 1;
    for (std::uint64_t i = 0; i < k; ++i)
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p;
}

std::optional<Int> perfect_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto sn = perfect_sqrt(Int(q.get_num()));
    auto sd = perfect_sqrt(Int(q.get_den()));
    if (!sn || !sd) return std::nullopt;
    return make_rat(*sn, *sd);
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod m");
    return r;
}

Int crt(const std::vector<std::pair<Int, Int>>& congruences) {
    Int x = 0, modulus = 1;
    for (const auto& [r, m] : congruences) {
        Int g;
        mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
        if (g != 1) throw std::domain_error("crt moduli not coprime");
        Int t = ((r - x) % m + m) % m * inv_mod(modulus % m, m) % m;
        x += modulus * t;
        modulus *= m;
    }
    return ((x % modulus) + modulus) % modulus;
}

std::optional<Int> cube_root_mod(const Int& a, const Int& p) {
    Int aa = ((a % p) + p) % p;
    for (Int z = 0; z < p; ++z) {
        if (z * z % p * z % p == aa) return z;
    }
    return std::nullopt;
}

std::uint64_t pair64(std::uint64_t a, std::uint64_t b) {
    // Cantor pairing; inputs are kept small by callers.
    std::uint64_t s = a + b;
    return s * (s + 1) / 2 + b;
}

std::pair<std::uint64_t, std::uint64_t> unpair64(std::uint64_t z) {
    std::uint64_t s = 0;
    // s = floor((sqrt(8z+1)-1)/2) without floating point
    std::uint64_t lo = 0, hi = 6074000999ULL;  // s(s+1)/2 fits in u64 up to here
    while (lo < hi) {
        std::uint64_t mid = (lo + hi + 1) / 2;
        if (mid * (mid + 1) / 2 <= z) lo = mid; else hi = mid - 1;
    }
    s = lo;
    std::uint64_t b = z - s * (s + 1) / 2;
    return {s - b, b};
}

}  // namespace ringbench::exactalg
