#include "ringbench/ideal.hpp"

#include <algorithm>
#include <deque>

namespace ringbench::exactalg {

DivisionResult poly_divide(const SparsePolynomial& f,
                           const std::vector<SparsePolynomial>& divisors) {
    unsigned nvars = f.variable_count();
    MonomialOrder order = f.order();
    DivisionResult out;
    out.quotients.assign(divisors.size(), SparsePolynomial(nvars, order));
    out.remainder = SparsePolynomial(nvars, order);
    SparsePolynomial h = f;
    while (!h.is_zero()) {
        const Term& lt = h.leading();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const SparsePolynomial& d = divisors[i];
            if (d.is_zero()) continue;
            if (d.variable_count() != nvars) throw std::domain_error("divisor arity mismatch");
            const Term& dl = d.leading();
            if (!monomial_divides(dl.mono, lt.mono)) continue;
            Exponents q = monomial_quotient(lt.mono, dl.mono);
            FieldElement c = lt.coeff / dl.coeff;
            out.quotients[i] = out.quotients[i] + SparsePolynomial::from_terms(
                                                      nvars, {{q, c}}, order);
            h = h - d.mul_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder = out.remainder +
                            SparsePolynomial::from_terms(nvars, {{lt.mono, lt.coeff}}, order);
            h = h - SparsePolynomial::from_terms(nvars, {{lt.mono, lt.coeff}}, order);
        }
    }
    return out;
}

namespace {

SparsePolynomial s_polynomial(const SparsePolynomial& f, const SparsePolynomial& g) {
    const Term& lf = f.leading();
    const Term& lg = g.leading();
    Exponents l = monomial_lcm(lf.mono, lg.mono);
    return f.mul_term(monomial_quotient(l, lf.mono), lf.coeff.inverse()) -
           g.mul_term(monomial_quotient(l, lg.mono), lg.coeff.inverse());
}

std::vector<SparsePolynomial> reduced_basis(std::vector<SparsePolynomial> gens,
                                            unsigned nvars, MonomialOrder order) {
    std::vector<SparsePolynomial> basis;
    for (SparsePolynomial& g : gens) {
        SparsePolynomial h = g.order() == order ? std::move(g) : g.with_order(order);
        if (!h.is_zero()) basis.push_back(std::move(h));
    }
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Exponents& mi = basis[i].leading().mono;
        const Exponents& mj = basis[j].leading().mono;
        // first Buchberger criterion: coprime head terms reduce to zero
        if (monomial_lcm(mi, mj) == monomial_mul(mi, mj)) continue;
        SparsePolynomial r = poly_divide(s_polynomial(basis[i], basis[j]), basis).remainder;
        if (r.is_zero()) continue;
        std::size_t n = basis.size();
        for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
        basis.push_back(std::move(r));
        if (basis.back().is_constant()) break;  // unit ideal, no need to continue
    }

    // minimalize: drop elements whose head is divisible by another head
    std::sort(basis.begin(), basis.end(), [order](const auto& a, const auto& b) {
        return compare_monomials(a.leading().mono, b.leading().mono, order) < 0;
    });
    std::vector<SparsePolynomial> minimal;
    for (const SparsePolynomial& g : basis) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& h) {
            return monomial_divides(h.leading().mono, g.leading().mono);
        });
        if (!redundant) minimal.push_back(g);
    }
    // interreduce tails and normalize leading coefficients to 1
    std::vector<SparsePolynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<SparsePolynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        SparsePolynomial r = poly_divide(minimal[i], others).remainder;
        if (r.is_zero()) continue;
        reduced.push_back(r * r.leading().coeff.inverse());
    }
    std::sort(reduced.begin(), reduced.end(), [order](const auto& a, const auto& b) {
        return compare_monomials(a.leading().mono, b.leading().mono, order) > 0;
    });
    return reduced;
}

}  // namespace

IdealPresentation::IdealPresentation(unsigned nvars, std::vector<SparsePolynomial> generators,
                                     MonomialOrder order)
    : nvars_(nvars), order_(order) {
    for (SparsePolynomial& g : generators) {
        if (g.variable_count() != nvars) throw std::domain_error("generator arity mismatch");
        if (g.is_zero()) continue;  // zero generators are dropped
        gens_.push_back(g.order() == order ? std::move(g) : g.with_order(order));
    }
}

IdealPresentation::IdealPresentation(const IdealPresentation& o)
    : nvars_(o.nvars_), order_(o.order_), gens_(o.gens_) {
    std::lock_guard<std::mutex> hold(*o.lock_);
    basis_ = o.basis_;
}

IdealPresentation& IdealPresentation::operator=(const IdealPresentation& o) {
    if (this == &o) return *this;
    nvars_ = o.nvars_;
    order_ = o.order_;
    gens_ = o.gens_;
    std::lock_guard<std::mutex> hold(*o.lock_);
    basis_ = o.basis_;
    return *this;
}

const std::vector<SparsePolynomial>& IdealPresentation::groebner() const {
    {
        std::lock_guard<std::mutex> hold(*lock_);
        if (basis_) return *basis_;
    }
    auto computed = std::make_shared<const std::vector<SparsePolynomial>>(
        reduced_basis(gens_, nvars_, order_));
    std::lock_guard<std::mutex> hold(*lock_);
    if (!basis_) basis_ = std::move(computed);
    return *basis_;
}

bool IdealPresentation::has_cached_basis() const {
    std::lock_guard<std::mutex> hold(*lock_);
    return basis_ != nullptr;
}

bool IdealPresentation::is_zero_ideal() const { return groebner().empty(); }

bool IdealPresentation::contains_one() const {
    const auto& b = groebner();
    return b.size() == 1 && b[0].is_constant();
}

SparsePolynomial IdealPresentation::reduce(const SparsePolynomial& f) const {
    SparsePolynomial g = f.order() == order_ ? f : f.with_order(order_);
    return poly_divide(g, groebner()).remainder;
}

IdealPresentation buchberger(const IdealPresentation& ideal) {
    IdealPresentation out(ideal.variable_count(), ideal.groebner(), ideal.order());
    out.groebner();  // basis of a reduced basis is itself; cache it
    return out;
}

bool ideal_member(const SparsePolynomial& f, const IdealPresentation& ideal) {
    if (f.variable_count() != ideal.variable_count())
        throw std::domain_error("membership arity mismatch");
    if (f.is_zero()) return true;
    return ideal.reduce(f).is_zero();
}

bool radical_member(const SparsePolynomial& f, const IdealPresentation& ideal) {
    if (f.variable_count() != ideal.variable_count())
        throw std::domain_error("membership arity mismatch");
    if (f.is_zero()) return true;
    unsigned n = ideal.variable_count();
    // fresh variable t appended as x_{n+1}
    std::vector<SparsePolynomial> gens;
    for (const SparsePolynomial& g : ideal.generators()) gens.push_back(g.embedded(n + 1, 0));
    SparsePolynomial t = SparsePolynomial::variable(n + 1, n);
    SparsePolynomial one = SparsePolynomial::constant(n + 1, FieldElement(1));
    gens.push_back(one - t * f.embedded(n + 1, 0));
    IdealPresentation extended(n + 1, std::move(gens), MonomialOrder::grevlex);
    return extended.contains_one();
}

IdealPresentation ideal_intersect(const IdealPresentation& a, const IdealPresentation& b) {
    if (a.variable_count() != b.variable_count())
        throw std::domain_error("intersection arity mismatch");
    unsigned n = a.variable_count();
    if (a.generators().empty() || b.generators().empty())
        return IdealPresentation(n, {}, a.order());
    // t*a + (1-t)*b in k[t, x1..xn], t eliminated by a lex basis with t first
    SparsePolynomial t = SparsePolynomial::variable(n + 1, 0, MonomialOrder::lex);
    SparsePolynomial one = SparsePolynomial::constant(n + 1, FieldElement(1), MonomialOrder::lex);
    std::vector<SparsePolynomial> gens;
    for (const SparsePolynomial& g : a.generators())
        gens.push_back(t * g.embedded(n + 1, 1).with_order(MonomialOrder::lex));
    for (const SparsePolynomial& g : b.generators())
        gens.push_back((one - t) * g.embedded(n + 1, 1).with_order(MonomialOrder::lex));
    IdealPresentation extended(n + 1, std::move(gens), MonomialOrder::lex);
    std::vector<SparsePolynomial> kept;
    for (const SparsePolynomial& g : extended.groebner())
        if (!g.depends_on(0)) kept.push_back(g.dropped_variable(0).with_order(a.order()));
    return IdealPresentation(n, std::move(kept), a.order());
}

IdealPresentation ideal_quotient(const IdealPresentation& a, const SparsePolynomial& f) {
    if (f.is_zero()) throw std::domain_error("ideal quotient by zero");
    if (f.variable_count() != a.variable_count())
        throw std::domain_error("quotient arity mismatch");
    unsigned n = a.variable_count();
    IdealPresentation fi(n, {f}, a.order());
    IdealPresentation meet = ideal_intersect(a, fi);
    std::vector<SparsePolynomial> gens;
    for (const SparsePolynomial& g : meet.generators()) {
        auto q = poly_exact_divide(g, f);
        if (!q) throw std::logic_error("intersection with <f> not divisible by f");
        gens.push_back(std::move(*q));
    }
    return IdealPresentation(n, std::move(gens), a.order());
}

IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b) {
    if (a.variable_count() != b.variable_count()) throw std::domain_error("sum arity mismatch");
    std::vector<SparsePolynomial> gens = a.generators();
    for (const SparsePolynomial& g : b.generators()) gens.push_back(g);
    return IdealPresentation(a.variable_count(), std::move(gens), a.order());
}

IdealPresentation ideal_sum(const IdealPresentation& a, const SparsePolynomial& f) {
    std::vector<SparsePolynomial> gens = a.generators();
    gens.push_back(f);
    return IdealPresentation(a.variable_count(), std::move(gens), a.order());
}

IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b) {
    if (a.variable_count() != b.variable_count())
        throw std::domain_error("product arity mismatch");
    std::vector<SparsePolynomial> gens;
    for (const SparsePolynomial& f : a.generators())
        for (const SparsePolynomial& g : b.generators()) gens.push_back(f * g);
    return IdealPresentation(a.variable_count(), std::move(gens), a.order());
}

std::optional<SparsePolynomial> poly_exact_divide(const SparsePolynomial& f,
                                                  const SparsePolynomial& g) {
    if (g.is_zero()) return std::nullopt;
    DivisionResult d = poly_divide(f, {g});
    if (!d.remainder.is_zero()) return std::nullopt;
    return d.quotients[0];
}

std::vector<Rat> univariate_rational_roots(const SparsePolynomial& p) {
    if (p.variable_count() != 1) throw std::domain_error("roots of a non-univariate polynomial");
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<FieldElement> dense = dense_univariate(p);
    std::vector<Rat> coeffs;
    for (const FieldElement& c : dense) {
        if (!c.is_rational()) throw std::domain_error("rational roots need rational coefficients");
        coeffs.push_back(c.rational());
    }
    std::vector<Rat> roots;
    // strip x^k
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    std::vector<Rat> f(coeffs.begin() + low, coeffs.end());
    if (f.size() >= 2) {
        // clear denominators, then candidates p/q with p | a0, q | lead
        Int lcm_den = 1;
        for (const Rat& c : f) {
            Int d = c.get_den(), g;
            mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
            lcm_den = lcm_den / g * d;
        }
        std::vector<Int> fi;
        for (const Rat& c : f) fi.push_back(Int(c.get_num()) * (lcm_den / Int(c.get_den())));
        for (const Int& pnum : divisors(fi.front())) {
            for (const Int& qden : divisors(fi.back())) {
                for (int sign : {1, -1}) {
                    Rat cand = make_rat(sign * pnum, qden);
                    Rat acc = 0;
                    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * cand + *it;
                    if (acc == 0) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace ringbench::exactalg
