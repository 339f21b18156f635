#include "ringbench/geometry.hpp"

namespace ringbench::geometry {

using namespace exactalg;

VarietyPresentation::VarietyPresentation(unsigned ambient_dimension,
                                         IdealPresentation defining_ideal,
                                         IrreducibilityCertificate cert)
    : ambient_(ambient_dimension), ideal_(std::move(defining_ideal)), cert_(cert) {
    if (ideal_.variable_count() != ambient_)
        throw std::domain_error("defining ideal arity != ambient dimension");
    if (ideal_.contains_one())
        throw std::domain_error("the unit ideal presents no variety");
}

VarietyPresentation VarietyPresentation::affine_space(unsigned n) {
    return VarietyPresentation(n, IdealPresentation(n, {}),
                               IrreducibilityCertificate::trusted_metadata);
}

PointOnVariety make_point(const VarietyPresentation& v, std::vector<FieldElement> coords) {
    if (coords.size() != v.ambient_dimension())
        throw std::domain_error("point arity != ambient dimension");
    for (const SparsePolynomial& g : v.defining_ideal().generators()) {
        if (!g.evaluate(coords).is_zero())
            throw std::domain_error("point does not satisfy the defining equations");
    }
    return PointOnVariety{std::move(coords)};
}

RationalFunction::RationalFunction(Fraction value, VarietyHandle home)
    : value_(std::move(value)), home_(std::move(home)) {
    if (!home_) throw std::domain_error("rational function needs a home variety");
    if (value_.variable_count() != home_->ambient_dimension())
        throw std::domain_error("rational function arity mismatch");
    if (ideal_member(value_.den(), home_->defining_ideal()))
        throw std::domain_error("denominator lies in the defining ideal");
}

RationalFunction::RationalFunction(SparsePolynomial num, SparsePolynomial den,
                                   VarietyHandle home)
    : RationalFunction(Fraction(std::move(num), std::move(den)), std::move(home)) {}

std::vector<PointOnVariety> variety_points_enumerate(const VarietyPresentation& v,
                                                     std::size_t budget) {
    unsigned n = v.ambient_dimension();
    std::vector<PointOnVariety> out;
    if (n == 0) return out;
    FieldEnumerator fe;
    std::size_t tested = 0;
    // index tuples (1-based) ordered by index sum, then lexicographically
    for (std::size_t diag = n; tested < budget; ++diag) {
        std::vector<std::size_t> idx(n, 1);
        idx[n - 1] = diag - (n - 1);
        while (tested < budget) {
            ++tested;
            const auto& prefix = fe.prefix(diag);
            std::vector<FieldElement> coords;
            coords.reserve(n);
            for (std::size_t i = 0; i < n; ++i) coords.emplace_back(prefix[idx[i] - 1]);
            bool on_variety = true;
            for (const SparsePolynomial& g : v.defining_ideal().generators()) {
                if (!g.evaluate(coords).is_zero()) { on_variety = false; break; }
            }
            if (on_variety) out.push_back(PointOnVariety{std::move(coords)});
            // lexicographic successor among compositions of diag into n
            // positive parts: bump the rightmost slot with slack after it
            bool advanced = false;
            for (std::size_t p = n - 1; p-- > 0;) {
                std::size_t tail = 0;
                for (std::size_t i = p + 1; i < n; ++i) tail += idx[i];
                if (tail > n - 1 - p) {
                    ++idx[p];
                    for (std::size_t i = p + 1; i + 1 < n; ++i) idx[i] = 1;
                    std::size_t used = 0;
                    for (std::size_t i = 0; i + 1 < n; ++i) used += idx[i];
                    idx[n - 1] = diag - used;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    return out;
}

namespace {

// <f2> + I(V), the ideal cutting out the zero locus of the denominator
// inside the home variety.
IdealPresentation denominator_locus(const RationalFunction& f) {
    return ideal_sum(f.home()->defining_ideal(), f.denominator());
}

}  // namespace

bool fn_defined_division_test(const RationalFunction& f,
                              const IdealPresentation& complement_ideal) {
    IdealPresentation locus = denominator_locus(f);
    for (const SparsePolynomial& g : complement_ideal.generators())
        if (!ideal_member(g, locus)) return false;
    return true;
}

bool fn_defined_on_open(const RationalFunction& f, const IdealPresentation& complement_ideal) {
    if (complement_ideal.variable_count() != f.home()->ambient_dimension())
        throw std::domain_error("complement ideal arity mismatch");
    if (fn_defined_division_test(f, complement_ideal)) return true;
    IdealPresentation locus = denominator_locus(f);
    for (const SparsePolynomial& g : complement_ideal.generators())
        if (!radical_member(g, locus)) return false;
    return true;
}

bool fn_vanishes_on_closed(const RationalFunction& f, const IdealPresentation& closed_ideal) {
    IdealPresentation w = ideal_sum(f.home()->defining_ideal(), closed_ideal);
    if (radical_member(f.denominator(), w))
        throw NowhereDefinedError("denominator vanishes identically on the closed set");
    return radical_member(f.numerator(), w);
}

ConstancyResult fn_is_constant(const RationalFunction& f, std::size_t search_budget) {
    const VarietyPresentation& v = *f.home();
    for (const PointOnVariety& p : variety_points_enumerate(v, search_budget)) {
        FieldElement d = f.denominator().evaluate(p.coords);
        if (d.is_zero()) continue;
        FieldElement n = f.numerator().evaluate(p.coords);
        // f1(x)·f2(c) - f2(x)·f1(c) in I(V)?
        SparsePolynomial crit = f.numerator() * d - f.denominator() * n;
        if (ideal_member(crit, v.defining_ideal()))
            return {ConstancyResult::Kind::constant, n / d};
        return {ConstancyResult::Kind::nonconstant, std::nullopt};
    }
    return {ConstancyResult::Kind::inconclusive, std::nullopt};
}

IdealPresentation ideal_of_union(const std::vector<VarietyPresentation>& components,
                                 bool cofinite_flag, const VarietyPresentation* ambient) {
    unsigned n = ambient         ? ambient->ambient_dimension()
                 : !components.empty() ? components.front().ambient_dimension()
                                       : 0;
    if (cofinite_flag) {
        // infinitely many components: only functions vanishing on the whole
        // ambient variety vanish on all of them
        if (ambient) return ambient->defining_ideal();
        return IdealPresentation(n, {});
    }
    if (components.empty()) {
        return IdealPresentation(n, {SparsePolynomial::constant(n, FieldElement(1))});
    }
    IdealPresentation acc = components.front().defining_ideal();
    for (std::size_t i = 1; i < components.size(); ++i)
        acc = ideal_intersect(acc, components[i].defining_ideal());
    return acc;
}

}  // namespace ringbench::geometry
