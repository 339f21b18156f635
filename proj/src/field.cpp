#include "ringbench/field.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace ringbench::exactalg {

namespace {

// Scale monic rational coefficients to a primitive integer vector.
std::vector<Int> to_primitive_integer(const std::vector<Rat>& coeffs) {
    Int lcm_den = 1;
    for (const Rat& c : coeffs) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const Rat& c : coeffs) out.push_back(Int(c.get_num()) * (lcm_den / Int(c.get_den())));
    Int content = 0;
    for (const Int& c : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (Int& c : out) c /= content;
    return out;
}

Int eval_int(const std::vector<Int>& coeffs, const Int& x) {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Lagrange interpolation through (xs[i], ys[i]); returns dense rational coeffs.
std::vector<Rat> lagrange(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    std::size_t n = xs.size();
    std::vector<Rat> acc(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // basis *= (x - xs[j])
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Rat(xs[j]);
            }
            basis = std::move(next);
            denom *= Rat(xs[i] - xs[j]);
        }
        Rat scale = Rat(ys[i]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    return acc;
}

// Exact division of dense integer polynomials; nullopt if not divisible.
std::optional<std::vector<Int>> divide_exact(const std::vector<Int>& f, const std::vector<Int>& g) {
    if (g.empty() || g.back() == 0) return std::nullopt;
    std::vector<Int> rem = f;
    if (rem.size() < g.size()) return std::nullopt;
    std::vector<Int> q(rem.size() - g.size() + 1, 0);
    for (std::size_t i = rem.size(); i-- >= g.size();) {
        Int lead = rem[i];
        if (lead == 0) continue;
        if (lead % g.back() != 0) return std::nullopt;
        Int c = lead / g.back();
        std::size_t shift = i - (g.size() - 1);
        q[shift] = c;
        for (std::size_t k = 0; k < g.size(); ++k) rem[shift + k] -= c * g[k];
        if (i == g.size() - 1) break;
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return q;
}

bool has_rational_root(const std::vector<Int>& f) {
    // rational root bound p | f[0], q | f.back(); f has no zero constant
    // term here (callers strip x | f first).
    if (f[0] == 0) return true;
    auto ps = divisors(f[0]);
    auto qs = divisors(f.back());
    for (const Int& p : ps)
        for (const Int& q : qs) {
            Rat r = make_rat(p, q);
            Rat acc = 0;
            for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * r + Rat(*it);
            if (acc == 0) return true;
            acc = 0;
            Rat rn = -r;
            for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * rn + Rat(*it);
            if (acc == 0) return true;
        }
    return false;
}

}  // namespace

bool univariate_irreducible_over_Q(const std::vector<Rat>& coeffs) {
    std::vector<Rat> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() < 2) return false;  // constants are not irreducible
    std::size_t deg = c.size() - 1;
    if (deg == 1) return true;
    if (deg == 2) {
        // quadratics split exactly when the discriminant is a square
        Rat disc = c[1] * c[1] - 4 * c[2] * c[0];
        return !rat_sqrt(disc).has_value();
    }
    std::vector<Int> f = to_primitive_integer(c);
    if (f[0] == 0) return false;  // x divides
    if (has_rational_root(f)) return false;
    // Kronecker trial factorization for factor degrees 2 .. deg/2.
    if (deg / 2 >= 2 && deg > 12)
        throw std::domain_error("irreducibility certification capped at degree 12");
    for (std::size_t d = 2; d <= deg / 2; ++d) {
        // sample points 0, 1, -1, 2, -2, ... until d+1 with nonzero value
        std::vector<Int> xs, vals;
        Int t = 0;
        long step = 0;
        while (xs.size() < d + 1) {
            Int v = eval_int(f, t);
            if (v != 0) { xs.push_back(t); vals.push_back(v); }
            ++step;
            t = (step % 2 == 1) ? Int((step + 1) / 2) : Int(-(step / 2));
        }
        std::vector<std::vector<Int>> divs;
        for (const Int& v : vals) {
            auto ds = divisors(v);
            std::vector<Int> signed_ds;
            for (const Int& x : ds) { signed_ds.push_back(x); signed_ds.push_back(-x); }
            divs.push_back(std::move(signed_ds));
        }
        std::vector<std::size_t> idx(d + 1, 0);
        while (true) {
            std::vector<Int> ys;
            for (std::size_t i = 0; i <= d; ++i) ys.push_back(divs[i][idx[i]]);
            auto cand = lagrange(xs, ys);
            if (cand.size() == d + 1) {
                bool integral = std::all_of(cand.begin(), cand.end(),
                                            [](const Rat& r) { return r.get_den() == 1; });
                if (integral) {
                    std::vector<Int> g;
                    for (const Rat& r : cand) g.push_back(Int(r.get_num()));
                    if (divide_exact(f, g)) return false;
                }
            }
            std::size_t pos = 0;
            while (pos <= d && ++idx[pos] == divs[pos].size()) { idx[pos] = 0; ++pos; }
            if (pos > d) break;
        }
    }
    return true;
}

ExtensionDescriptor::ExtensionDescriptor(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (Rat& c : coeffs_) c.canonicalize();
    if (coeffs_.size() < 2) throw std::domain_error("extension degree must be >= 1");
    if (coeffs_.back() != 1) throw std::domain_error("minimal polynomial must be monic");
    if (!univariate_irreducible_over_Q(coeffs_))
        throw std::domain_error("minimal polynomial is reducible over Q");
}

std::string ExtensionDescriptor::min_poly_text() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

FieldElement FieldElement::extension(std::vector<Rat> coords, ExtensionHandle ext) {
    if (!ext) throw std::domain_error("extension element needs a descriptor");
    if (coords.size() != ext->degree())
        throw std::domain_error("coordinate vector length != extension degree");
    for (Rat& c : coords) c.canonicalize();
    FieldElement e;
    // collapse to a plain rational when all higher coordinates vanish
    bool pure = true;
    for (std::size_t i = 1; i < coords.size(); ++i)
        if (coords[i] != 0) { pure = false; break; }
    if (pure) {
        e.rat_ = coords.empty() ? Rat(0) : coords[0];
        return e;
    }
    e.coords_ = std::move(coords);
    e.ext_ = std::move(ext);
    return e;
}

FieldElement FieldElement::generator(ExtensionHandle ext) {
    std::vector<Rat> c(ext->degree(), Rat(0));
    if (c.size() < 2) return FieldElement(Rat(-ext->min_poly()[0]));  // degree-1: alpha rational
    c[1] = 1;
    return extension(std::move(c), std::move(ext));
}

const Rat& FieldElement::rational() const {
    if (ext_) throw std::domain_error("not a rational element");
    return rat_;
}

bool FieldElement::is_zero() const { return !ext_ && rat_ == 0; }
bool FieldElement::is_one() const { return !ext_ && rat_ == 1; }

void FieldElement::align(const FieldElement& a, const FieldElement& b,
                         std::vector<Rat>& av, std::vector<Rat>& bv, ExtensionHandle& ext) {
    if (a.ext_ && b.ext_ && !a.ext_->same_as(*b.ext_))
        throw std::domain_error("field elements from incompatible extensions");
    ext = a.ext_ ? a.ext_ : b.ext_;
    unsigned d = ext ? ext->degree() : 1;
    av.assign(d, Rat(0));
    bv.assign(d, Rat(0));
    if (a.ext_) av = a.coords_; else av[0] = a.rat_;
    if (b.ext_) bv = b.coords_; else bv[0] = b.rat_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!ext_ && !o.ext_) return FieldElement(Rat(rat_ + o.rat_));
    std::vector<Rat> a, b;
    ExtensionHandle ext;
    align(*this, o, a, b, ext);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return extension(std::move(a), ext);
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    if (!ext_) return FieldElement(Rat(-rat_));
    std::vector<Rat> c = coords_;
    for (Rat& x : c) x = -x;
    return extension(std::move(c), ext_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!ext_ && !o.ext_) return FieldElement(Rat(rat_ * o.rat_));
    std::vector<Rat> a, b;
    ExtensionHandle ext;
    align(*this, o, a, b, ext);
    unsigned d = ext->degree();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (unsigned i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    // reduce by the monic minimal polynomial
    const std::vector<Rat>& m = ext->min_poly();
    for (std::size_t i = prod.size(); i-- > d;) {
        if (prod[i] == 0) continue;
        Rat c = prod[i];
        prod[i] = 0;
        for (unsigned k = 0; k < d; ++k) prod[i - d + k] -= c * m[k];
    }
    prod.resize(d);
    return extension(std::move(prod), ext);
}

FieldElement FieldElement::inverse() const {
    if (!ext_) {
        if (rat_ == 0) throw std::domain_error("division by zero");
        return FieldElement(Rat(1 / rat_));
    }
    // extended Euclid in Q[t] against the minimal polynomial
    unsigned d = ext_->degree();
    std::vector<Rat> r0 = ext_->min_poly();
    std::vector<Rat> r1 = coords_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(r0);
    while (r1.size() > 1) {  // stop once the remainder is a constant
        if (r1.empty()) throw std::domain_error("division by zero in extension field");
        // r0 = q*r1 + r2
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        std::vector<Rat> rem = r0;
        while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
            trim(rem);
            if (rem.size() < r1.size() || rem.empty()) break;
            Rat c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            trim(rem);
            if (rem.empty()) break;
        }
        // s2 = s0 - q*s1
        std::vector<Rat> s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size()), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty() || r1[0] == 0) throw std::domain_error("division by zero in extension field");
    // r1 is a nonzero constant: inverse = s1 / r1
    std::vector<Rat> inv(d, Rat(0));
    for (std::size_t i = 0; i < s1.size() && i < d; ++i) inv[i] = s1[i] / r1[0];
    return extension(std::move(inv), ext_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
    if (!ext_ && !o.ext_) return rat_ == o.rat_;
    // extension elements with purely rational value collapse to rationals
    // at construction, so a rational never equals a proper extension
    // element, and elements over distinct descriptors are kept distinct
    if (!ext_ || !o.ext_) return false;
    if (!ext_->same_as(*o.ext_)) return false;
    return coords_ == o.coords_;
}

std::string FieldElement::to_string() const {
    if (!ext_) return rat_to_string(rat_);
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rat& c = coords_[i];
        if (c == 0) continue;
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
    if (!a.ext_ && !b.ext_) return mpq_cmp(a.rat_.get_mpq_t(), b.rat_.get_mpq_t());
    if (!a.ext_) return -1;  // rationals sort before extension elements
    if (!b.ext_) return 1;
    if (!a.ext_->same_as(*b.ext_)) {
        const auto& ma = a.ext_->min_poly();
        const auto& mb = b.ext_->min_poly();
        if (ma.size() != mb.size()) return ma.size() < mb.size() ? -1 : 1;
        for (std::size_t i = 0; i < ma.size(); ++i) {
            int c = mpq_cmp(ma[i].get_mpq_t(), mb[i].get_mpq_t());
            if (c != 0) return c;
        }
    }
    for (std::size_t i = a.coords_.size(); i-- > 0;) {
        int c = mpq_cmp(a.coords_[i].get_mpq_t(), b.coords_[i].get_mpq_t());
        if (c != 0) return c;
    }
    return 0;
}

Rat field_enumerate_rational(std::uint64_t index) {
    if (index == 0) throw std::domain_error("field enumeration is 1-based");
    if (index == 1) return Rat(0);
    std::uint64_t k = index / 2;  // index 2k -> w_k, 2k+1 -> -w_k

    // the walk is sequential, so enumeration-heavy callers get a cache
    static std::mutex lock;
    static std::vector<Rat> walk{Rat(1)};  // walk[i] = w_{i+1}
    constexpr std::size_t kCacheCap = 1 << 22;
    Rat w;
    {
        std::lock_guard<std::mutex> hold(lock);
        if (k <= kCacheCap) {
            while (walk.size() < k) {
                const Rat& prev = walk.back();
                Int fl = Int(prev.get_num()) / Int(prev.get_den());
                walk.push_back(Rat(1) / (Rat(fl) * 2 - prev + 1));
            }
            w = walk[k - 1];
        } else {
            w = walk.back();
            for (std::uint64_t i = walk.size(); i < k; ++i) {
                Int fl = Int(w.get_num()) / Int(w.get_den());
                w = Rat(1) / (Rat(fl) * 2 - w + 1);
            }
        }
    }
    return (index % 2 == 0) ? w : Rat(-w);
}

Int rational_enumeration_index(const Rat& value) {
    if (value == 0) return 1;
    // position of |value| in the Calkin-Wilf walk: replay the Euclid
    // steps of (num, den) backwards through the tree, root at index 1
    Int a = value > 0 ? Int(value.get_num()) : Int(-value.get_num());
    Int b = value.get_den();
    std::vector<bool> bits;  // path from the value up to the root
    while (!(a == 1 && b == 1)) {
        if (a > b) { bits.push_back(true); a -= b; }
        else { bits.push_back(false); b -= a; }
    }
    Int walk = 1;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) walk = 2 * walk + (*it ? 1 : 0);
    // phi(2k) = w_k, phi(2k+1) = -w_k
    Int idx = 2 * walk;
    if (value < 0) idx += 1;
    return idx;
}

FieldElement field_enumerate(std::uint64_t index, const ExtensionHandle& ext) {
    if (index == 0) throw std::domain_error("field enumeration is 1-based");
    if (!ext) return FieldElement(field_enumerate_rational(index));
    unsigned d = ext->degree();
    std::vector<Rat> coords(d);
    std::uint64_t z = index - 1;
    for (unsigned i = 0; i + 1 < d; ++i) {
        auto [a, b] = unpair64(z);
        coords[i] = field_enumerate_rational(b + 1);
        z = a;
    }
    coords[d - 1] = field_enumerate_rational(z + 1);
    return FieldElement::extension(std::move(coords), ext);
}

Rat FieldEnumerator::next() {
    std::size_t n = cache_.size() + 1;
    const auto& p = prefix(n);
    return p[n - 1];
}

const std::vector<Rat>& FieldEnumerator::prefix(std::size_t n) {
    while (cache_.size() < n) {
        std::size_t idx = cache_.size() + 1;
        if (idx == 1) {
            cache_.push_back(Rat(0));
        } else if (idx % 2 == 0) {
            if (walk_ == 0) {
                walk_ = 1;
            } else {
                Int fl = Int(walk_.get_num()) / Int(walk_.get_den());
                walk_ = Rat(1) / (Rat(fl) * 2 - walk_ + 1);
            }
            cache_.push_back(walk_);
        } else {
            cache_.push_back(Rat(-walk_));
        }
    }
    return cache_;
}

}  // namespace ringbench::exactalg
