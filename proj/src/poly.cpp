#include "ringbench/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ringbench::exactalg {

unsigned exponents_total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
    if (order == MonomialOrder::lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    unsigned da = exponents_total_degree(a), db = exponents_total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller trailing exponent wins
    }
    return 0;
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents monomial_mul(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents monomial_quotient(const Exponents& b, const Exponents& a) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) throw std::domain_error("monomial quotient not defined");
        r[i] = b[i] - a[i];
    }
    return r;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

void SparsePolynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& x, const Term& y) {
        return compare_monomials(x.mono, y.mono, order_) > 0;
    });
    std::vector<Term> merged;
    for (Term& t : terms_) {
        if (t.mono.size() != nvars_) throw std::domain_error("term arity mismatch");
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff = merged.back().coeff + t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (Term& t : merged)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

SparsePolynomial SparsePolynomial::constant(unsigned nvars, const FieldElement& c,
                                            MonomialOrder order) {
    SparsePolynomial p(nvars, order);
    if (!c.is_zero()) p.terms_.push_back({Exponents(nvars, 0), c});
    return p;
}

SparsePolynomial SparsePolynomial::variable(unsigned nvars, unsigned j, MonomialOrder order) {
    if (j >= nvars) throw std::domain_error("variable index out of range");
    SparsePolynomial p(nvars, order);
    Exponents e(nvars, 0);
    e[j] = 1;
    p.terms_.push_back({std::move(e), FieldElement(1)});
    return p;
}

SparsePolynomial SparsePolynomial::from_terms(unsigned nvars, std::vector<Term> terms,
                                              MonomialOrder order) {
    SparsePolynomial p(nvars, order);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool SparsePolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exponents_total_degree(terms_[0].mono) == 0);
}

FieldElement SparsePolynomial::constant_value() const {
    for (const Term& t : terms_)
        if (exponents_total_degree(t.mono) == 0) return t.coeff;
    return FieldElement(0);
}

const Term& SparsePolynomial::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
}

unsigned SparsePolynomial::total_degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, exponents_total_degree(t.mono));
    return d;
}

unsigned SparsePolynomial::degree_in(unsigned j) const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono[j]);
    return d;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::domain_error("polynomial arity mismatch");
    SparsePolynomial r(nvars_, order_);
    r.terms_ = terms_;
    for (const Term& t : o.terms_) r.terms_.push_back(t);
    r.normalize();
    return r;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(nvars_, order_);
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    return *this + (-o);
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::domain_error("polynomial arity mismatch");
    SparsePolynomial r(nvars_, order_);
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            r.terms_.push_back({monomial_mul(a.mono, b.mono), a.coeff * b.coeff});
    r.normalize();
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const FieldElement& c) const {
    SparsePolynomial r(nvars_, order_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

SparsePolynomial SparsePolynomial::mul_term(const Exponents& mono, const FieldElement& coeff) const {
    SparsePolynomial r(nvars_, order_);
    if (coeff.is_zero()) return r;
    for (const Term& t : terms_) r.terms_.push_back({monomial_mul(t.mono, mono), t.coeff * coeff});
    // multiplying by a single term preserves sorted order
    r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(),
                                  [](const Term& t) { return t.coeff.is_zero(); }),
                   r.terms_.end());
    return r;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
    if (nvars_ != o.nvars_) return false;
    if (order_ == o.order_) {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    return (*this - o.with_order(order_)).is_zero();
}

SparsePolynomial SparsePolynomial::with_order(MonomialOrder order) const {
    SparsePolynomial r(nvars_, order);
    r.terms_ = terms_;
    r.normalize();
    return r;
}

SparsePolynomial SparsePolynomial::embedded(unsigned new_nvars, unsigned offset) const {
    if (offset + nvars_ > new_nvars) throw std::domain_error("embedding does not fit");
    SparsePolynomial r(new_nvars, order_);
    for (const Term& t : terms_) {
        Exponents e(new_nvars, 0);
        for (unsigned i = 0; i < nvars_; ++i) e[i + offset] = t.mono[i];
        r.terms_.push_back({std::move(e), t.coeff});
    }
    r.normalize();
    return r;
}

SparsePolynomial SparsePolynomial::dropped_variable(unsigned j) const {
    if (depends_on(j)) throw std::domain_error("cannot drop an occurring variable");
    SparsePolynomial r(nvars_ - 1, order_);
    for (const Term& t : terms_) {
        Exponents e;
        e.reserve(nvars_ - 1);
        for (unsigned i = 0; i < nvars_; ++i)
            if (i != j) e.push_back(t.mono[i]);
        r.terms_.push_back({std::move(e), t.coeff});
    }
    r.normalize();
    return r;
}

SparsePolynomial SparsePolynomial::substitute_variable(unsigned j, const FieldElement& value) const {
    SparsePolynomial r(nvars_, order_);
    for (const Term& t : terms_) {
        FieldElement c = t.coeff;
        for (unsigned k = 0; k < t.mono[j]; ++k) c = c * value;
        Exponents e = t.mono;
        e[j] = 0;
        r.terms_.push_back({std::move(e), c});
    }
    r.normalize();
    return r;
}

SparsePolynomial SparsePolynomial::substitute(const std::vector<SparsePolynomial>& images) const {
    if (images.size() != nvars_) throw std::domain_error("substitution arity mismatch");
    unsigned target_nvars = images.empty() ? 0 : images[0].variable_count();
    MonomialOrder target_order = images.empty() ? order_ : images[0].order();
    SparsePolynomial acc(target_nvars, target_order);
    for (const Term& t : terms_) {
        SparsePolynomial prod = SparsePolynomial::constant(target_nvars, t.coeff, target_order);
        for (unsigned j = 0; j < nvars_; ++j)
            for (unsigned k = 0; k < t.mono[j]; ++k) prod = prod * images[j];
        acc = acc + prod;
    }
    return acc;
}

FieldElement SparsePolynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_) throw std::domain_error("evaluation arity mismatch");
    FieldElement acc(0);
    for (const Term& t : terms_) {
        FieldElement v = t.coeff;
        for (unsigned j = 0; j < nvars_; ++j)
            for (unsigned k = 0; k < t.mono[j]; ++k) v = v * point[j];
        acc = acc + v;
    }
    return acc;
}

bool SparsePolynomial::depends_on(unsigned j) const {
    for (const Term& t : terms_)
        if (t.mono[j] > 0) return true;
    return false;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        const FieldElement& c = t.coeff;
        bool constant_mono = exponents_total_degree(t.mono) == 0;
        std::string coeff_text;
        bool negative = false;
        if (c.is_rational()) {
            Rat a = c.rational();
            if (a < 0) { negative = true; a = -a; }
            coeff_text = rat_to_string(a);
        } else {
            coeff_text = c.to_string();  // parenthesized, sign inside
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool need_coeff = constant_mono || coeff_text != "1";
        if (need_coeff) os << coeff_text;
        bool printed_var = false;
        for (unsigned j = 0; j < nvars_; ++j) {
            if (t.mono[j] == 0) continue;
            if (need_coeff || printed_var) os << "*";
            need_coeff = true;
            printed_var = true;
            os << "x" << (j + 1);
            if (t.mono[j] > 1) os << "^" << t.mono[j];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    unsigned nvars;
    ExtensionHandle ext;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at offset " +
                                    std::to_string(i) + ": " + why);
    }

    Rat parse_rational() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected number");
        std::string num = s.substr(start, i - start);
        if (i < s.size() && s[i] == '/') {
            ++i;
            std::size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == dstart) fail("expected denominator");
            num += "/" + s.substr(dstart, i - dstart);
        }
        return rat_from_string(num);
    }

    unsigned parse_unsigned() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
    }

    // "(a0 + a1*t + ...)" over the declared extension
    FieldElement parse_extension_coeff() {
        if (!ext) fail("parenthesized coefficient without an extension header");
        if (!eat('(')) fail("expected (");
        std::vector<Rat> coords(ext->degree(), Rat(0));
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (eat('-')) sign = -1;
            else if (eat('+')) sign = 1;
            else if (!first) fail("expected + or - in extension coefficient");
            skip_ws();
            Rat mag(1);
            bool have_number = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
            if (have_number) mag = parse_rational();
            skip_ws();
            unsigned power = 0;
            if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
            if (i < s.size() && s[i] == 't') {
                ++i;
                power = 1;
                if (eat('^')) power = parse_unsigned();
            } else if (!have_number) {
                fail("expected number or t");
            }
            if (power >= coords.size()) fail("t power exceeds extension degree");
            coords[power] += Rat(sign) * mag;
            first = false;
            if (eat(')')) break;
        }
        return FieldElement::extension(std::move(coords), ext);
    }

    SparsePolynomial parse_poly(MonomialOrder order) {
        std::vector<Term> terms;
        bool first = true;
        while (true) {
            skip_ws();
            if (i >= s.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            int sign = 1;
            if (eat('-')) sign = -1;
            else if (eat('+')) sign = 1;
            else if (!first) fail("expected + or -");
            skip_ws();
            FieldElement coeff(1);
            bool have_coeff = false;
            if (peek('(')) {
                coeff = parse_extension_coeff();
                have_coeff = true;
            } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = FieldElement(parse_rational());
                have_coeff = true;
            }
            Exponents mono(nvars, 0);
            bool have_var = false;
            while (true) {
                skip_ws();
                std::size_t save = i;
                if ((have_coeff || have_var) && !eat('*')) break;
                skip_ws();
                if (i >= s.size() || s[i] != 'x') {
                    i = save;
                    break;
                }
                ++i;
                unsigned idx = parse_unsigned();
                if (idx == 0 || idx > nvars) fail("variable index out of range");
                unsigned power = 1;
                if (eat('^')) power = parse_unsigned();
                mono[idx - 1] += power;
                have_var = true;
                have_coeff = true;
            }
            if (!have_coeff && !have_var) fail("expected term");
            if (sign < 0) coeff = -coeff;
            terms.push_back({std::move(mono), coeff});
            first = false;
            skip_ws();
            if (i >= s.size()) break;
            if (s[i] != '+' && s[i] != '-') fail("unexpected trailing text");
        }
        return SparsePolynomial::from_terms(nvars, std::move(terms), order);
    }
};

}  // namespace

SparsePolynomial SparsePolynomial::parse(const std::string& text, unsigned nvars,
                                         MonomialOrder order, const ExtensionHandle& ext) {
    Parser p{text, 0, nvars, ext};
    SparsePolynomial out = p.parse_poly(order);
    p.skip_ws();
    if (p.i != text.size()) p.fail("unexpected trailing text");
    return out;
}

unsigned SparsePolynomial::max_variable_index(const std::string& text) {
    unsigned best = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            unsigned v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + static_cast<unsigned>(text[j] - '0');
                ++j;
            }
            best = std::max(best, v);
        }
    }
    return best;
}

std::vector<Exponents> monomials_up_to_degree(unsigned nvars, unsigned d) {
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    // iterate all exponent vectors with total degree <= d
    while (true) {
        if (exponents_total_degree(cur) <= d) out.push_back(cur);
        std::size_t pos = 0;
        while (pos < nvars) {
            ++cur[pos];
            if (exponents_total_degree(cur) <= d) break;
            cur[pos] = 0;
            ++pos;
        }
        if (pos == nvars) break;
    }
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        return compare_monomials(a, b, MonomialOrder::grevlex) > 0;
    });
    return out;
}

std::vector<FieldElement> dense_univariate(const SparsePolynomial& p) {
    if (p.variable_count() != 1) throw std::domain_error("not univariate");
    std::vector<FieldElement> out(p.is_zero() ? 1 : p.degree_in(0) + 1, FieldElement(0));
    for (const Term& t : p.terms()) out[t.mono[0]] = t.coeff;
    return out;
}

SparsePolynomial from_dense_univariate(const std::vector<FieldElement>& coeffs,
                                       MonomialOrder order) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) terms.push_back({Exponents{static_cast<unsigned>(i)}, coeffs[i]});
    return SparsePolynomial::from_terms(1, std::move(terms), order);
}

std::vector<Rat> univariate_gcd_q(std::vector<Rat> a, std::vector<Rat> b) {
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rat c = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    trim(a);
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

}  // namespace ringbench::exactalg
