#include "ringbench/harness.hpp"

#include <algorithm>
#include <array>

namespace ringbench::harness {

using namespace exactalg;
using geometry::PointOnVariety;

SparsePolynomial decode_polynomial(std::uint64_t id, unsigned nvars) {
    SparsePolynomial acc(nvars);
    std::uint64_t rest = id;
    while (rest != 0) {
        auto [tail, term_code] = unpair64(rest - 1);
        auto [mono_code, coeff_code] = unpair64(term_code);
        // nonzero coefficients: phi(k) for k >= 2
        FieldElement coeff(field_enumerate_rational(coeff_code + 2));
        Exponents mono(nvars, 0);
        std::uint64_t m = mono_code;
        for (unsigned j = 0; j + 1 < nvars; ++j) {
            auto [hi, lo] = unpair64(m);
            mono[j] = static_cast<unsigned>(lo % 8);  // small exponents suffice
            m = hi;
        }
        if (nvars > 0) mono[nvars - 1] = static_cast<unsigned>(m % 8);
        acc = acc + SparsePolynomial::from_terms(nvars, {{std::move(mono), coeff}});
        rest = tail;
    }
    return acc;
}

Fraction decode_fraction(std::uint64_t id, unsigned nvars) {
    auto [num_code, den_code] = unpair64(id);
    SparsePolynomial num = decode_polynomial(num_code, nvars);
    SparsePolynomial den = den_code == 0
                               ? SparsePolynomial::constant(nvars, FieldElement(1))
                               : decode_polynomial(den_code, nvars);
    if (den.is_zero()) den = SparsePolynomial::constant(nvars, FieldElement(1));
    return Fraction(std::move(num), std::move(den));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

CopyPresentation::CopyPresentation(std::shared_ptr<const unions::UnionStructure> base,
                                   std::uint64_t seed)
    : base_(std::move(base)), seed_(seed) {}

std::uint64_t CopyPresentation::permuted(std::uint64_t idx) const {
    std::uint64_t block = idx / kBlock;
    std::uint64_t offset = idx % kBlock;
    // Fisher-Yates over the block, driven by a splitmix stream
    std::array<std::uint64_t, kBlock> slots;
    for (std::uint64_t i = 0; i < kBlock; ++i) slots[i] = i;
    std::uint64_t state = splitmix64(seed_ ^ (block + 1));
    for (std::uint64_t i = kBlock - 1; i > 0; --i) {
        state = splitmix64(state);
        std::uint64_t j = state % (i + 1);
        std::swap(slots[i], slots[j]);
    }
    return block * kBlock + slots[offset];
}

std::optional<PointOnVariety> CopyPresentation::point_at(std::uint64_t idx) const {
    return base_->point_at(permuted(idx));
}

unions::PointSource CopyPresentation::source() const {
    auto self = *this;
    return [self](std::uint64_t idx) { return self.point_at(idx); };
}

DiagramServer::DiagramServer(std::shared_ptr<const unions::UnionStructure> structure)
    : union_(std::move(structure)) {}

DiagramServer::DiagramServer(std::shared_ptr<const schemes::SpecPresentation> spectrum)
    : spec_(std::move(spectrum)) {}

std::size_t DiagramServer::total_queries() const {
    return union_ ? union_->oracle()->query_count() : spec_->oracle()->query_count();
}

std::uint64_t DiagramServer::query_bound(const LRSentence& s) {
    std::uint64_t size = std::max({s.open_u, s.open_v, s.a, s.b, s.c});
    return 4 * (size + 8) * (size + 8);
}

DiagramServer::Answer DiagramServer::serve(const LRSentence& sentence) {
    std::size_t before = total_queries();
    Answer ans;
    ans.truth = union_ ? eval_union(sentence) : eval_spec(sentence);
    ans.queries = total_queries() - before;
    ++served_;
    return ans;
}

unions::WeakOpen DiagramServer::decode_open_union(std::uint64_t open_id) const {
    std::vector<PointOnVariety> excluded;
    for (unsigned bit = 0; bit < 64; ++bit) {
        if (!(open_id & (1ULL << bit))) continue;
        auto p = union_->point_at(bit);
        if (p) excluded.push_back(*p);
    }
    unions::WeakOpen w;
    w.ambient = excluded.empty() ? unions::ZOpen::whole()
                                 : unions::ZOpen::cofinite(std::move(excluded));
    return w;
}

bool DiagramServer::section_class_zero(const Fraction& f) const {
    if (f.is_zero()) return true;
    return ideal_member(f.num(), union_->ideal_of_y());
}

bool DiagramServer::union_section_in(std::uint64_t fn_id, std::uint64_t open_id) const {
    Fraction f = decode_fraction(fn_id, union_->family().ambient_dimension);
    return unions::union_section_member(f, decode_open_union(open_id), *union_);
}

bool DiagramServer::eval_union(const LRSentence& s) const {
    unsigned n = union_->family().ambient_dimension;
    switch (s.shape) {
        case LRSentence::Shape::point_in_open: {
            auto p = union_->point_at(s.a);
            if (!p) return false;  // the constant names no point
            unions::WeakOpen w = decode_open_union(s.open_u);
            if (w.ambient.kind == unions::ZOpen::Kind::whole) return true;
            for (const auto& q : w.ambient.excluded)
                if (q.coords == p->coords) return false;
            return true;
        }
        case LRSentence::Shape::section_in_ring:
            if (union_->mode() == unions::UnionMode::disjoint_spaces &&
                !union_->oracle()->is_finite())
                throw std::domain_error(
                    "section sentences over infinite disjoint unions need tuple sections");
            return union_section_in(s.a, s.open_u);
        case LRSentence::Shape::add_atom:
        case LRSentence::Shape::mul_atom: {
            Fraction fa = decode_fraction(s.a, n);
            Fraction fb = decode_fraction(s.b, n);
            Fraction fc = decode_fraction(s.c, n);
            unions::WeakOpen w = decode_open_union(s.open_u);
            for (const Fraction* f : {&fa, &fb, &fc})
                if (!unions::union_section_member(*f, w, *union_)) return false;
            Fraction combined = s.shape == LRSentence::Shape::add_atom ? fa + fb : fa * fb;
            return section_class_zero(combined - fc);
        }
        case LRSentence::Shape::restriction_atom: {
            // V inside U means V excludes at least the points U excludes
            std::uint64_t u = s.open_u, v = s.open_v;
            if ((u & v) != u) return false;
            Fraction fa = decode_fraction(s.a, n);
            Fraction fb = decode_fraction(s.b, n);
            if (!unions::union_section_member(fa, decode_open_union(u), *union_)) return false;
            if (!unions::union_section_member(fb, decode_open_union(v), *union_)) return false;
            return section_class_zero(fa - fb);
        }
    }
    return false;
}

bool DiagramServer::eval_spec(const LRSentence& s) const {
    auto excluded_ids = [&](std::uint64_t open_id) {
        std::vector<unsigned> ids;
        for (unsigned bit = 0; bit < 64; ++bit)
            if (open_id & (1ULL << bit)) ids.push_back(bit);
        return ids;
    };
    switch (s.shape) {
        case LRSentence::Shape::point_in_open: {
            auto p = spec_->prime_at(s.a);
            if (!p) return false;
            for (unsigned id : excluded_ids(s.open_u))
                if (id == s.a) return false;
            return true;
        }
        case LRSentence::Shape::section_in_ring:
        case LRSentence::Shape::add_atom:
        case LRSentence::Shape::mul_atom:
        case LRSentence::Shape::restriction_atom: {
            if (spec_->flavor() != schemes::SpecPresentation::Flavor::integer_valuations)
                throw std::domain_error("section sentences are served on the integer flavor");
            // sections decode to rationals via the field listing
            auto decode_rat = [](std::uint64_t id) { return field_enumerate_rational(id + 1); };
            auto member_outside = [&](const Rat& f, std::uint64_t open_id) {
                if (f == 0) return true;
                auto ids = excluded_ids(open_id);
                for (const auto& [p, e] : factorize(Int(f.get_den()))) {
                    auto prime = schemes::SchemePrime::integer(p);
                    if (!spec_->contains(prime)) continue;
                    bool excluded = false;
                    for (unsigned id : ids) {
                        auto q = spec_->prime_at(id);
                        if (q && q->kind == schemes::SchemePrime::Kind::integer && q->p == p)
                            excluded = true;
                    }
                    if (!excluded) return false;
                }
                return true;
            };
            if (s.shape == LRSentence::Shape::section_in_ring)
                return member_outside(decode_rat(s.a), s.open_u);
            if (s.shape == LRSentence::Shape::restriction_atom) {
                std::uint64_t u = s.open_u, v = s.open_v;
                if ((u & v) != u) return false;
                return member_outside(decode_rat(s.a), u) &&
                       member_outside(decode_rat(s.b), v) &&
                       decode_rat(s.a) == decode_rat(s.b);
            }
            Rat fa = decode_rat(s.a), fb = decode_rat(s.b), fc = decode_rat(s.c);
            if (!member_outside(fa, s.open_u) || !member_outside(fb, s.open_u) ||
                !member_outside(fc, s.open_u))
                return false;
            return s.shape == LRSentence::Shape::add_atom ? fa + fb == fc : fa * fb == fc;
        }
    }
    return false;
}

EnumerationServer::EnumerationServer(unions::ComponentFamily family, OracleHandle oracle)
    : family_(std::move(family)), oracle_(std::move(oracle)) {}

void EnumerationServer::advance() {
    // pull one more member from the positive stream, then dovetail the
    // point grid of the members seen so far by one diagonal
    auto m = oracle_->member_at(member_cursor_);
    if (m) {
        ++member_cursor_;
        if (!family_.max_index || *m <= family_.max_index)
            member_prefix_.push_back(*m);
    }
    ++diagonal_;
    for (std::size_t s = 0; s < member_prefix_.size(); ++s) {
        if (diagonal_ < s) continue;
        std::uint64_t j = diagonal_ - s;
        auto p = family_.point_gen(static_cast<unsigned>(member_prefix_[s]), j);
        if (!p) continue;
        std::uint64_t id = points_.size();
        points_.push_back(*p);
        // the new point lies in the whole space and outside opens that
        // exclude other already-discovered points
        LRSentence in_whole;
        in_whole.shape = LRSentence::Shape::point_in_open;
        in_whole.a = id;
        in_whole.open_u = 0;
        pending_.push_back(in_whole);
        if (id > 0) {
            LRSentence in_cof;
            in_cof.shape = LRSentence::Shape::point_in_open;
            in_cof.a = id;
            in_cof.open_u = 1;  // the open excluding point 0
            pending_.push_back(in_cof);
        }
        // polynomial sections are global: record one arithmetic fact
        if (id % 3 == 0) {
            LRSentence add;
            add.shape = LRSentence::Shape::add_atom;
            add.open_u = 0;
            // decode_fraction(0) = 0, and 0 + 0 = 0
            add.a = add.b = add.c = 0;
            pending_.push_back(add);
        }
    }
}

std::vector<LRSentence> EnumerationServer::emit(std::size_t count) {
    std::vector<LRSentence> out;
    std::size_t stall = 0;
    while (out.size() < count && stall < 4096) {
        if (pending_.empty()) {
            advance();
            ++stall;
            continue;
        }
        stall = 0;
        out.push_back(pending_.front());
        pending_.erase(pending_.begin());
    }
    return out;
}

RoundtripAudit roundtrip(const std::set<std::uint64_t>& x, unions::ComponentFamily family,
                         unions::UnionMode mode, std::uint64_t seed, std::uint64_t budget) {
    auto rigidity = unions::rigidity_certify(
        family, family.max_index ? family.max_index
                                 : static_cast<unsigned>(x.empty() ? 1 : *x.rbegin()));
    if (!rigidity.pass)
        throw std::domain_error("family rigidity certificate failed: " + rigidity.detail);
    auto oracle = std::make_shared<OracleSet>(OracleSet::finite(x));
    auto ax = std::make_shared<unions::UnionStructure>(unions::build_AX(family, oracle, mode));
    RoundtripAudit audit;
    // touch the whole prefix once so encode-side queries are attributed
    ax->point_at(0);
    audit.encode_queries = oracle->query_count();
    CopyPresentation copy(ax, seed);
    audit.recovered = unions::enumerate_components(copy.source(), family, budget);
    audit.decode_queries = oracle->query_count() - audit.encode_queries;
    return audit;
}

RoundtripAudit scheme_roundtrip(const std::set<std::uint64_t>& x,
                                schemes::SpecPresentation::Flavor flavor, unsigned prefix) {
    auto oracle = std::make_shared<OracleSet>(OracleSet::finite(x));
    auto zx = schemes::build_ZX_scheme(oracle, flavor);
    RoundtripAudit audit;
    audit.encode_queries = oracle->query_count();
    for (unsigned n = 1; n <= prefix; ++n) {
        if (zx.contains(schemes::encoding_prime(flavor, n))) audit.recovered.insert(n);
    }
    audit.decode_queries = oracle->query_count() - audit.encode_queries;
    return audit;
}

}  // namespace ringbench::harness
