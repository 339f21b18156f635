#include "ringbench/schemes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ringbench::schemes {

using namespace exactalg;

long padic_order(const Rat& q, const Int& p) {
    if (q == 0) throw std::domain_error("p-adic order of zero");
    if (p < 2 || !is_prime(p)) throw std::domain_error("order at a non-prime");
    long up = static_cast<long>(multiplicity(Int(q.get_num()), p));
    long down = static_cast<long>(multiplicity(Int(q.get_den()), p));
    return up - down;
}

bool LocalizedRingDescriptor::value_forbidden(unsigned j, const Rat& a) const {
    if (j >= forbidden.size()) throw std::domain_error("variable index out of range");
    if (!forbidden[j]) return false;  // no constraint on this variable
    Int idx = rational_enumeration_index(a);
    if (!idx.fits_ulong_p()) {
        // the enumeration index grows with the continued-fraction length
        // and can leave the machine range; the explicit backings still
        // decide such indices without a query
        if (forbidden[j]->is_finite()) return false;
        throw std::domain_error("enumeration index out of range for a rule oracle");
    }
    return forbidden[j]->member(idx.get_ui());
}

bool P_member(const SparsePolynomial& h, const LocalizedRingDescriptor& descriptor) {
    if (h.is_zero()) throw std::domain_error("membership of the zero polynomial");
    for (unsigned j = 0; j < descriptor.nvars; ++j) {
        for (const FieldElement& a : linear_factors_in_variable(h, j)) {
            if (descriptor.value_forbidden(j, a.rational())) return false;
        }
    }
    return true;
}

bool R_member(const Fraction& g, const LocalizedRingDescriptor& descriptor) {
    if (g.is_zero()) return true;
    for (unsigned j = 0; j < descriptor.nvars; ++j) {
        for (const FieldElement& a : linear_factors_in_variable(g.den(), j)) {
            if (g.order_at_linear(j, a) >= 0) continue;  // cancels against the numerator
            if (descriptor.value_forbidden(j, a.rational())) return false;
        }
    }
    return true;
}

FunctionFieldDescriptor::FunctionFieldDescriptor(std::vector<Rat> q_coeffs,
                                                 SparsePolynomial a_poly)
    : q_(std::move(q_coeffs)), a_(std::move(a_poly)) {
    if (q_.size() < 2 || q_.back() != 1)
        throw std::domain_error("Q must be monic of positive degree");
    unsigned m = degree();
    if (m == 1) return;  // K = k(x), nothing to certify
    unsigned n = a_.variable_count();
    if (n < 2)
        throw std::domain_error("substitution irreducibility needs at least two variables");
    for (unsigned j = 0; j < n; ++j) {
        unsigned dj = a_.degree_in(j);
        if (dj == 0 || std::gcd(dj, m) != 1)
            throw std::domain_error("gcd(deg_j A, m) = 1 violated");
        // A must be monic as a polynomial in x_j
        SparsePolynomial lead(n, a_.order());
        for (const Term& t : a_.terms()) {
            if (t.mono[j] == dj) {
                Exponents e = t.mono;
                e[j] = 0;
                lead = lead + SparsePolynomial::from_terms(n, {{e, t.coeff}}, a_.order());
            }
        }
        if (!(lead == SparsePolynomial::constant(n, FieldElement(1), a_.order())))
            throw std::domain_error("A is not monic in every variable");
    }
}

std::vector<SparsePolynomial> FunctionFieldDescriptor::f_coeffs() const {
    unsigned n = a_.variable_count();
    std::vector<SparsePolynomial> out;
    for (std::size_t i = 0; i < q_.size(); ++i)
        out.push_back(SparsePolynomial::constant(n, FieldElement(q_[i])));
    out[0] = out[0] - a_;
    return out;
}

FunctionFieldElement::FunctionFieldElement(std::vector<Fraction> coords,
                                           FunctionFieldHandle field)
    : coords_(std::move(coords)), field_(std::move(field)) {
    if (!field_) throw std::domain_error("function field element needs a field");
    if (coords_.size() != field_->degree())
        throw std::domain_error("coordinate vector length != field degree");
}

FunctionFieldElement FunctionFieldElement::from_fraction(Fraction f, FunctionFieldHandle field) {
    std::vector<Fraction> coords(field->degree(),
                                 Fraction::constant(field->variable_count(), FieldElement(0)));
    coords[0] = std::move(f);
    return FunctionFieldElement(std::move(coords), std::move(field));
}

FunctionFieldElement FunctionFieldElement::generator(FunctionFieldHandle field) {
    if (field->degree() < 2)
        return from_fraction(Fraction::constant(field->variable_count(), FieldElement(0)),
                             field);
    std::vector<Fraction> coords(field->degree(),
                                 Fraction::constant(field->variable_count(), FieldElement(0)));
    coords[1] = Fraction::constant(field->variable_count(), FieldElement(1));
    return FunctionFieldElement(std::move(coords), std::move(field));
}

bool FunctionFieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Fraction& c) { return c.is_zero(); });
}

FunctionFieldElement FunctionFieldElement::operator+(const FunctionFieldElement& o) const {
    std::vector<Fraction> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + o.coords_[i];
    return FunctionFieldElement(std::move(out), field_);
}

FunctionFieldElement FunctionFieldElement::operator-(const FunctionFieldElement& o) const {
    std::vector<Fraction> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - o.coords_[i];
    return FunctionFieldElement(std::move(out), field_);
}

FunctionFieldElement FunctionFieldElement::operator*(const FunctionFieldElement& o) const {
    unsigned m = field_->degree();
    unsigned n = field_->variable_count();
    Fraction zero = Fraction::constant(n, FieldElement(0));
    std::vector<Fraction> prod(2 * m - 1, zero);
    for (unsigned i = 0; i < m; ++i) {
        if (coords_[i].is_zero()) continue;
        for (unsigned k = 0; k < m; ++k)
            prod[i + k] = prod[i + k] + coords_[i] * o.coords_[k];
    }
    // z^m = A - (q_0 + q_1 z + ... + q_{m-1} z^{m-1})
    Fraction a_frac = Fraction::from_polynomial(field_->a_poly());
    const auto& q = field_->q_coeffs();
    for (std::size_t i = prod.size(); i-- > m;) {
        if (prod[i].is_zero()) continue;
        Fraction c = prod[i];
        prod[i] = zero;
        prod[i - m] = prod[i - m] + c * a_frac;
        for (unsigned k = 0; k < m; ++k) {
            if (q[k] == 0) continue;
            prod[i - m + k] = prod[i - m + k] - c * Fraction::constant(n, FieldElement(q[k]));
        }
    }
    prod.resize(m, zero);
    return FunctionFieldElement(std::move(prod), field_);
}

FunctionFieldElement FunctionFieldElement::scale(const Fraction& c) const {
    std::vector<Fraction> out = coords_;
    for (Fraction& x : out) x = x * c;
    return FunctionFieldElement(std::move(out), field_);
}

bool FunctionFieldElement::operator==(const FunctionFieldElement& o) const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!(coords_[i] == o.coords_[i])) return false;
    return true;
}

std::vector<Fraction> minpoly_in_K(const FunctionFieldElement& y) {
    unsigned m = y.field()->degree();
    unsigned n = y.field()->variable_count();
    Fraction zero = Fraction::constant(n, FieldElement(0));
    Fraction one = Fraction::constant(n, FieldElement(1));

    // columns: powers y^0 .. y^d as coordinate vectors
    std::vector<std::vector<Fraction>> powers;
    FunctionFieldElement pw = FunctionFieldElement::from_fraction(one, y.field());
    powers.push_back(pw.coords());
    for (unsigned d = 1; d <= m; ++d) {
        pw = pw * y;
        powers.push_back(pw.coords());
    }

    for (unsigned d = 1; d <= m; ++d) {
        // solve sum_{i<d} c_i y^i = y^d by Gaussian elimination
        std::vector<std::vector<Fraction>> mat(m, std::vector<Fraction>(d + 1, zero));
        for (unsigned r = 0; r < m; ++r) {
            for (unsigned c = 0; c < d; ++c) mat[r][c] = powers[c][r];
            mat[r][d] = powers[d][r];
        }
        unsigned rank = 0;
        std::vector<long> pivot_col(m, -1);
        for (unsigned col = 0; col < d && rank < m; ++col) {
            unsigned sel = rank;
            while (sel < m && mat[sel][col].is_zero()) ++sel;
            if (sel == m) continue;
            std::swap(mat[sel], mat[rank]);
            Fraction inv = one / mat[rank][col];
            for (unsigned c2 = col; c2 <= d; ++c2) mat[rank][c2] = mat[rank][c2] * inv;
            for (unsigned r2 = 0; r2 < m; ++r2) {
                if (r2 == rank || mat[r2][col].is_zero()) continue;
                Fraction f = mat[r2][col];
                for (unsigned c2 = col; c2 <= d; ++c2)
                    mat[r2][c2] = mat[r2][c2] - f * mat[rank][c2];
            }
            pivot_col[rank] = col;
            ++rank;
        }
        // consistent iff no row has zero coefficients but nonzero rhs
        bool consistent = true;
        for (unsigned r = rank; r < m; ++r)
            if (!mat[r][d].is_zero()) { consistent = false; break; }
        if (!consistent) continue;
        std::vector<Fraction> coeffs(d + 1, zero);
        coeffs[d] = one;
        for (unsigned r = 0; r < rank; ++r)
            coeffs[pivot_col[r]] = zero - mat[r][d];
        return coeffs;
    }
    throw std::logic_error("no minimal polynomial of degree <= m found");
}

namespace {

// Bareiss fraction-free determinant of a polynomial matrix.
SparsePolynomial determinant(std::vector<std::vector<SparsePolynomial>> m, unsigned nvars) {
    std::size_t n = m.size();
    if (n == 0) return SparsePolynomial::constant(nvars, FieldElement(1));
    SparsePolynomial prev = SparsePolynomial::constant(nvars, FieldElement(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return SparsePolynomial(nvars);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                SparsePolynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = poly_exact_divide(num, prev);
                if (!q) throw std::logic_error("Bareiss division failed");
                m[i][j] = std::move(*q);
            }
            m[i][k] = SparsePolynomial(nvars);
        }
        prev = m[k][k];
    }
    SparsePolynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Fraction norm_K(const FunctionFieldElement& y) {
    unsigned m = y.field()->degree();
    unsigned n = y.field()->variable_count();
    if (y.is_zero()) return Fraction::constant(n, FieldElement(0));

    // clear denominators: y = G(z)/D with G over k[x]
    SparsePolynomial d_common = SparsePolynomial::constant(n, FieldElement(1));
    for (const Fraction& c : y.coords()) d_common = d_common * c.den();
    std::vector<SparsePolynomial> g;  // coefficients of G by z-degree
    unsigned gdeg = 0;
    for (std::size_t i = 0; i < y.coords().size(); ++i) {
        const Fraction& c = y.coords()[i];
        auto q = poly_exact_divide(d_common, c.den());
        g.push_back(c.num() * *q);
        if (!g.back().is_zero()) gdeg = static_cast<unsigned>(i);
    }
    g.resize(gdeg + 1);

    // Res_z(F, G) via the Sylvester matrix: deg G rows of F, m rows of G
    std::vector<SparsePolynomial> f = y.field()->f_coeffs();
    std::size_t size = m + gdeg;
    std::vector<std::vector<SparsePolynomial>> mat(
        size, std::vector<SparsePolynomial>(size, SparsePolynomial(n)));
    for (unsigned r = 0; r < gdeg; ++r)
        for (unsigned c = 0; c <= m; ++c) mat[r][r + c] = f[m - c];
    for (unsigned r = 0; r < m; ++r)
        for (unsigned c = 0; c <= gdeg; ++c) mat[gdeg + r][r + c] = g[gdeg - c];
    SparsePolynomial res = determinant(std::move(mat), n);

    // N(G/D) = Res_z(F, G) / D^m since F is monic
    SparsePolynomial dm = SparsePolynomial::constant(n, FieldElement(1));
    for (unsigned i = 0; i < m; ++i) dm = dm * d_common;
    return Fraction(res, dm);
}

namespace {

bool fraction_in_base(const Fraction& c, const IntegralBase& base) {
    if (std::holds_alternative<PolynomialBase>(base)) return c.is_polynomial();
    if (const auto* loc = std::get_if<LocalizedBase>(&base)) {
        return R_member(c, loc->descriptor);
    }
    const auto& lin = std::get<LinearLocalBase>(base);
    if (c.is_zero()) return true;
    return c.order_at_linear(lin.j, FieldElement(lin.a)) >= 0;
}

}  // namespace

bool integral_member(const FunctionFieldElement& y, const IntegralBase& base) {
    std::vector<Fraction> mp = minpoly_in_K(y);
    for (std::size_t i = 0; i + 1 < mp.size(); ++i)
        if (!fraction_in_base(mp[i], base)) return false;
    return true;
}

unsigned order_at_linear_prime(const FunctionFieldElement& y, unsigned j, const Rat& a) {
    if (y.is_zero()) throw std::domain_error("order of zero");
    unsigned n = y.field()->variable_count();
    Fraction norm = norm_K(y);
    // the norm bounds the order: (x_j - a)^{r m} divides the numerator
    long norm_ord = norm.order_at_linear(j, FieldElement(a));
    if (norm_ord < 0) throw std::domain_error("element is not integral at the prime");
    unsigned cap = static_cast<unsigned>(norm_ord);

    std::vector<Fraction> mp = minpoly_in_K(y);
    unsigned d = static_cast<unsigned>(mp.size() - 1);
    Fraction lin = Fraction::from_polynomial(linear_prime(n, j, FieldElement(a)));
    unsigned r = 0;
    while (r < cap + 1) {
        // minpoly of y/(x_j-a)^{r+1} has coefficient i scaled by lin^{(r+1)(d-i)}
        bool integral = true;
        for (std::size_t i = 0; i + 1 < mp.size(); ++i) {
            if (mp[i].is_zero()) continue;
            unsigned power = static_cast<unsigned>((r + 1) * (d - i));
            Fraction denom = Fraction::constant(n, FieldElement(1));
            for (unsigned t = 0; t < power; ++t) denom = denom * lin;
            Fraction scaled = mp[i] / denom;
            if (!scaled.is_polynomial()) { integral = false; break; }
        }
        if (!integral) break;
        ++r;
    }
    return r;
}

SchemePrime SchemePrime::zero() { return SchemePrime{}; }

SchemePrime SchemePrime::integer(Int p) {
    SchemePrime s;
    s.kind = Kind::integer;
    s.p = std::move(p);
    return s;
}

SchemePrime SchemePrime::linear(unsigned j, Rat a) {
    SchemePrime s;
    s.kind = Kind::linear;
    s.j = j;
    s.a = std::move(a);
    return s;
}

std::string SchemePrime::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::zero: os << "PRIME zero"; break;
        case Kind::integer: os << "PRIME int " << p.get_str(); break;
        case Kind::linear: os << "PRIME lin " << (j + 1) << " " << rat_to_string(a); break;
    }
    return os.str();
}

SchemePrime SchemePrime::parse(const std::string& line) {
    std::istringstream is(line);
    std::string tag, kind;
    if (!(is >> tag >> kind) || tag != "PRIME")
        throw std::invalid_argument("malformed prime line: " + line);
    if (kind == "zero") return zero();
    if (kind == "int") {
        std::string v;
        if (!(is >> v)) throw std::invalid_argument("malformed prime line: " + line);
        return integer(Int(v));
    }
    if (kind == "lin") {
        unsigned j;
        std::string v;
        if (!(is >> j >> v) || j == 0)
            throw std::invalid_argument("malformed prime line: " + line);
        return linear(j - 1, rat_from_string(v));
    }
    throw std::invalid_argument("unknown prime kind: " + kind);
}

SpecPresentation SpecPresentation::integer_valuations(harness::OracleHandle x) {
    SpecPresentation s;
    s.flavor_ = Flavor::integer_valuations;
    s.oracle_ = std::move(x);
    return s;
}

SpecPresentation SpecPresentation::linear_primes(LocalizedRingDescriptor descriptor) {
    SpecPresentation s;
    s.flavor_ = Flavor::linear_primes;
    s.descriptor_ = std::move(descriptor);
    if (!s.descriptor_.forbidden.empty()) s.oracle_ = s.descriptor_.forbidden[0];
    return s;
}

std::optional<SchemePrime> SpecPresentation::prime_at(std::uint64_t idx) const {
    if (idx == 0) return SchemePrime::zero();
    if (flavor_ == Flavor::integer_valuations) {
        // scan prime indices in order, keeping the included ones
        std::uint64_t seen = 0;
        for (std::uint64_t k = 1; k < 64 + 4 * idx; ++k) {
            SchemePrime cand = SchemePrime::integer(nth_prime(k));
            if (!contains(cand)) continue;
            if (++seen == idx) return cand;
        }
        return std::nullopt;
    }
    // linear flavor: finite backings enumerate their member lists exactly;
    // rule backings dovetail (variable, enumeration index)
    bool all_finite = true;
    for (const auto& o : descriptor_.forbidden)
        if (o && !o->is_finite()) { all_finite = false; break; }
    std::uint64_t seen = 0;
    if (all_finite) {
        for (std::uint64_t diag = 2;; ++diag) {
            bool any_left = false;
            for (unsigned j = 0; j < descriptor_.nvars && j + 1 < diag; ++j) {
                std::uint64_t i = diag - 1 - j;
                if (!descriptor_.forbidden[j]) continue;
                const auto& members = descriptor_.forbidden[j]->finite_members();
                if (!members.empty() && *members.rbegin() + 1 >= diag - 1) any_left = true;
                if (!members.count(i)) continue;
                if (++seen == idx) return SchemePrime::linear(j, field_enumerate_rational(i));
            }
            if (!any_left && diag > 2 + descriptor_.nvars) return std::nullopt;
        }
    }
    for (std::uint64_t diag = 2; diag < 4 * (idx + 2) * (descriptor_.nvars + 1); ++diag) {
        for (unsigned j = 0; j < descriptor_.nvars && j + 1 < diag; ++j) {
            std::uint64_t i = diag - 1 - j;
            if (!descriptor_.forbidden[j] || !descriptor_.forbidden[j]->member(i)) continue;
            if (++seen == idx)
                return SchemePrime::linear(j, field_enumerate_rational(i));
        }
    }
    return std::nullopt;
}

bool SpecPresentation::contains(const SchemePrime& prime) const {
    if (prime.kind == SchemePrime::Kind::zero) return true;
    if (flavor_ == Flavor::integer_valuations) {
        if (prime.kind != SchemePrime::Kind::integer) return false;
        // find the 1-based index of p in the prime listing
        std::uint64_t k = 0;
        Int q = 1;
        do {
            mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
            ++k;
        } while (q < prime.p);
        if (q != prime.p) return false;  // not a prime at all
        if (k % 2 == 0) return true;     // even-indexed primes always kept
        if (k == 1) return false;        // p_1 = 2 encodes nothing
        return oracle_->member((k - 1) / 2);
    }
    if (prime.kind != SchemePrime::Kind::linear) return false;
    return descriptor_.value_forbidden(prime.j, prime.a);
}

bool SpecPresentation::section_member(const Rat& f) const {
    if (flavor_ != Flavor::integer_valuations)
        throw std::domain_error("rational sections live on the integer flavor");
    if (f == 0) return true;
    for (const auto& [p, e] : factorize(Int(f.get_den()))) {
        if (contains(SchemePrime::integer(p))) return false;
    }
    return true;
}

bool SpecPresentation::section_member(const Fraction& f) const {
    if (flavor_ != Flavor::linear_primes)
        throw std::domain_error("function sections live on the linear flavor");
    return R_member(f, descriptor_);
}

namespace {

harness::OracleHandle odd_even_split(harness::OracleHandle x) {
    return std::make_shared<harness::OracleSet>(harness::OracleSet::rule(
        "odd-even-split", [x](std::uint64_t k) {
            if (k % 2 == 0 && k > 0) return true;
            if (k <= 1) return false;
            return x->member((k - 1) / 2);
        }));
}

}  // namespace

bool valuation_scheme_member(const Rat& f, const SpecPresentation& zx) {
    return zx.section_member(f);
}

SpecPresentation build_ZX_scheme(harness::OracleHandle x, SpecPresentation::Flavor flavor) {
    if (flavor == SpecPresentation::Flavor::integer_valuations)
        return SpecPresentation::integer_valuations(std::move(x));
    LocalizedRingDescriptor d;
    d.nvars = 1;
    d.forbidden = {odd_even_split(std::move(x))};
    return SpecPresentation::linear_primes(std::move(d));
}

SpecPresentation spec_points(LocalizedRingDescriptor descriptor) {
    return SpecPresentation::linear_primes(std::move(descriptor));
}

SchemePrime encoding_prime(SpecPresentation::Flavor flavor, unsigned n) {
    if (flavor == SpecPresentation::Flavor::integer_valuations)
        return SchemePrime::integer(nth_prime(2 * n + 1));
    return SchemePrime::linear(0, field_enumerate_rational(2 * n + 1));
}

unsigned scheme_decide_pair(const SpecPresentation& copy, unsigned i, unsigned j) {
    if (copy.contains(encoding_prime(copy.flavor(), i))) return i;
    if (copy.contains(encoding_prime(copy.flavor(), j))) return j;
    throw std::runtime_error("neither designated prime is present");
}

}  // namespace ringbench::schemes
