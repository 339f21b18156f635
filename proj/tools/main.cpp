// ringbench: exact-arithmetic workbench for encoding index sets into
// unions of varieties and scheme presentations, and recovering them from
// isomorphic copies. See README.md for the file formats.

#include "CLI11.hpp"

#include "ringbench/harness.hpp"
#include "ringbench/io.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace ringbench;
using exactalg::Fraction;
using exactalg::IdealPresentation;
using exactalg::SparsePolynomial;

int run_ideal_member(const std::string& ideal_path, const std::string& poly_path) {
    auto ideal = io::read_ideal_file(ideal_path);
    auto poly = io::read_poly_file(poly_path, ideal.nvars);
    if (poly.nvars > ideal.nvars) {
        // re-embed the ideal into the larger ambient ring
        std::vector<SparsePolynomial> gens;
        for (const auto& g : ideal.ideal.generators())
            gens.push_back(g.embedded(poly.nvars, 0));
        ideal.ideal = IdealPresentation(poly.nvars, std::move(gens));
    }
    bool member = ideal_member(poly.poly, ideal.ideal);
    std::cout << (member ? "MEMBER" : "NOT-MEMBER") << "\n";
    return member ? 0 : 1;
}

int run_fn_defined(const std::string& variety_path, const std::string& fn_path,
                   const std::string& complement_path) {
    auto vf = io::read_variety_file(variety_path);
    unsigned n = vf.variety.ambient_dimension();
    auto fn = io::read_fraction_file(fn_path, n);
    auto comp = io::read_ideal_file(complement_path);
    if (comp.nvars != n) {
        std::vector<SparsePolynomial> gens;
        for (const auto& g : comp.ideal.generators()) gens.push_back(g.embedded(n, 0));
        comp.ideal = IdealPresentation(n, std::move(gens));
    }
    geometry::RationalFunction f(fn.fraction,
                                 std::make_shared<geometry::VarietyPresentation>(vf.variety));
    bool defined = geometry::fn_defined_on_open(f, comp.ideal);
    std::cout << (defined ? "DEFINED" : "NOT-DEFINED") << "\n";
    return defined ? 0 : 1;
}

int run_fn_constant(const std::string& variety_path, const std::string& fn_path,
                    std::uint64_t budget) {
    auto vf = io::read_variety_file(variety_path);
    auto fn = io::read_fraction_file(fn_path, vf.variety.ambient_dimension());
    geometry::RationalFunction f(fn.fraction,
                                 std::make_shared<geometry::VarietyPresentation>(vf.variety));
    auto r = geometry::fn_is_constant(f, budget);
    switch (r.kind) {
        case geometry::ConstancyResult::Kind::constant:
            std::cout << "CONSTANT " << r.value->to_string() << "\n";
            return 0;
        case geometry::ConstancyResult::Kind::nonconstant:
            std::cout << "NONCONSTANT\n";
            return 1;
        default:
            std::cout << "INCONCLUSIVE\n";
            return 1;
    }
}

spaces::SheafPresentation curve_sheaf(spaces::TopologyKind topology) {
    auto curve = std::make_shared<geometry::VarietyPresentation>(
        2, IdealPresentation(2, {SparsePolynomial::parse("x2 - x1^2", 2)}));
    return spaces::SheafPresentation::regular(curve, topology);
}

int run_sheaf_check(const std::string& preset) {
    using spaces::SheafPresentation;
    using spaces::SpaceOpen;
    auto P = [](const std::string& s, unsigned n) { return SparsePolynomial::parse(s, n); };

    spaces::SheafReport report;
    if (preset == "zariski-curve" || preset == "corrupt-omit" || preset == "corrupt-empty" ||
        preset == "corrupt-forced") {
        auto s = curve_sheaf(spaces::TopologyKind::zariski);
        SpaceOpen u = SpaceOpen::whole();
        std::vector<SpaceOpen> cover{
            SpaceOpen::zariski(IdealPresentation(2, {P("x1", 2)})),
            SpaceOpen::zariski(IdealPresentation(2, {P("x1 - 1", 2)})),
        };
        Fraction glob = Fraction::from_polynomial(P("x2", 2));
        std::vector<Fraction> probes{
            glob,
            Fraction::from_polynomial(P("x1 + 3", 2)),
            Fraction(P("1", 2), P("x1^2 + 1", 2)),
            Fraction(P("1", 2), P("x1", 2)),
        };
        if (preset == "corrupt-omit") {
            report = spaces::sheaf_axioms_check(s.with_omitted(u, glob), u, cover, probes);
        } else if (preset == "corrupt-empty") {
            report = spaces::sheaf_axioms_check(s.with_nonzero_empty_ring(), u, cover, probes);
        } else if (preset == "corrupt-forced") {
            auto forced = s.with_forced(u, Fraction(P("1", 2), P("x1", 2)));
            report = spaces::sheaf_axioms_check(forced, u, cover, probes);
        } else {
            report = spaces::sheaf_axioms_check(s, u, cover, probes);
        }
    } else if (preset == "cofinite-curve") {
        auto s = curve_sheaf(spaces::TopologyKind::cofinite);
        SpaceOpen u = SpaceOpen::whole();
        geometry::PointOnVariety p0{{exactalg::FieldElement(0), exactalg::FieldElement(0)}};
        geometry::PointOnVariety p1{{exactalg::FieldElement(1), exactalg::FieldElement(1)}};
        std::vector<SpaceOpen> cover{SpaceOpen::cofinite({p0}), SpaceOpen::cofinite({p1})};
        std::vector<Fraction> probes{
            Fraction::from_polynomial(P("x1*x2", 2)),
            Fraction(P("1", 2), P("x1^2 + 1", 2)),
            Fraction(P("1", 2), P("x1", 2)),
        };
        report = spaces::sheaf_axioms_check(s, u, cover, probes);
    } else if (preset == "union-fibers") {
        auto fam = unions::elliptic_fiber_family();
        auto oracle = std::make_shared<harness::OracleSet>(harness::OracleSet::finite({1, 2}));
        auto y = std::make_shared<unions::UnionStructure>(
            fam, oracle, unions::UnionMode::subspaces_of_fixed_z);
        auto s = spaces::SheafPresentation::union_quotient(y);
        SpaceOpen u = SpaceOpen::whole();
        std::vector<SpaceOpen> cover{
            SpaceOpen::cofinite({*fam.point_gen(1, 0)}),
            SpaceOpen::cofinite({*fam.point_gen(2, 0)}),
        };
        std::vector<Fraction> probes{
            Fraction::from_polynomial(P("x3", 3)),
            Fraction(P("1", 3), P("x3 - 5", 3)),
            Fraction::from_polynomial(P("x2^2 - x1^3 - x1 - x3", 3)),
        };
        report = spaces::sheaf_axioms_check(s, u, cover, probes);
    } else {
        std::cerr << "unknown preset: " << preset << "\n";
        return 2;
    }
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    for (const std::string& f : report.failures) std::cout << "WITNESS " << f << "\n";
    return report.pass ? 0 : 1;
}

unions::ComponentFamily family_by_name(const std::string& name, unsigned appendix_count) {
    if (name == "elliptic") return unions::elliptic_fiber_family();
    if (name == "disjoint") return unions::disjoint_elliptic_family();
    if (name == "super") return unions::superelliptic_family();
    if (name == "appendix")
        return unions::appendix_family(curves::appendix_A_sequence(appendix_count));
    throw std::runtime_error("unknown family: " + name);
}

unions::UnionMode mode_by_name(const std::string& name) {
    if (name == "union3") return unions::UnionMode::subspaces_of_fixed_z;
    if (name == "union4") return unions::UnionMode::disjoint_spaces;
    throw std::runtime_error("unknown mode: " + name);
}

void print_recovered(const std::set<unsigned>& set) {
    std::cout << "RECOVERED";
    for (unsigned i : set) std::cout << " " << i;
    std::cout << "\n";
}

int run_encode(const std::string& oracle_path, const std::string& family,
               const std::string& mode, std::uint64_t seed, std::uint64_t points,
               std::uint64_t facts, unsigned appendix_count, const std::string& out_path) {
    auto oracle = io::read_oracle_file(oracle_path);
    auto fam = family_by_name(family, appendix_count);
    auto ax = std::make_shared<unions::UnionStructure>(
        unions::build_AX(fam, oracle, mode_by_name(mode)));
    harness::CopyPresentation copy(ax, seed);
    if (out_path.empty()) {
        io::write_copy_dump(std::cout, copy, points, facts);
    } else {
        std::ofstream out(out_path);
        io::write_copy_dump(out, copy, points, facts);
    }
    std::cout << "QUERIES " << oracle->query_count() << "\n";
    return 0;
}

int run_decode(const std::string& dump_path, const std::string& family,
               unsigned appendix_count) {
    std::ifstream in(dump_path);
    if (!in) throw std::runtime_error("cannot open dump: " + dump_path);
    auto dump = io::read_copy_dump(in);
    auto fam = family_by_name(family, appendix_count);
    std::set<unsigned> recovered;
    for (const auto& p : dump.points) {
        auto c = fam.chi(p);
        if (c) recovered.insert(*c);
    }
    print_recovered(recovered);
    return 0;
}

int run_roundtrip(const std::string& oracle_path, const std::string& family,
                  const std::string& mode, std::uint64_t seed, unsigned appendix_count) {
    auto oracle = io::read_oracle_file(oracle_path);
    if (!oracle->is_finite()) throw std::runtime_error("round trips need a finite oracle file");
    auto fam = family_by_name(family, appendix_count);
    std::set<std::uint64_t> x = oracle->finite_members();
    auto audit = harness::roundtrip(x, fam, mode_by_name(mode), seed);
    print_recovered(audit.recovered);
    std::cout << "QUERIES " << (audit.encode_queries + audit.decode_queries) << "\n";
    std::set<unsigned> expected;
    for (std::uint64_t v : x) expected.insert(static_cast<unsigned>(v));
    bool ok = audit.recovered == expected;
    std::cout << (ok ? "OK" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
}

int run_scheme_build(const std::string& oracle_path, const std::string& flavor,
                     std::uint64_t primes) {
    auto oracle = io::read_oracle_file(oracle_path);
    auto fl = flavor == "int" ? schemes::SpecPresentation::Flavor::integer_valuations
                              : schemes::SpecPresentation::Flavor::linear_primes;
    auto zx = schemes::build_ZX_scheme(oracle, fl);
    io::write_scheme_dump(std::cout, zx, oracle_path, primes);
    return 0;
}

int run_scheme_probe(const std::string& oracle_path, const std::string& flavor) {
    auto oracle = io::read_oracle_file(oracle_path);
    auto fl = flavor == "int" ? schemes::SpecPresentation::Flavor::integer_valuations
                              : schemes::SpecPresentation::Flavor::linear_primes;
    auto zx = schemes::build_ZX_scheme(oracle, fl);
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.rfind("ASK ", 0) != 0) continue;
        std::string element = line.substr(4);
        bool member;
        if (fl == schemes::SpecPresentation::Flavor::integer_valuations) {
            member = zx.section_member(exactalg::rat_from_string(element));
        } else {
            member = zx.section_member(Fraction::parse(element, 1));
        }
        std::cout << (member ? "YES" : "NO") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for ringed-space and scheme encodings"};
    app.require_subcommand(1);

    std::string ideal_path, poly_path, variety_path, fn_path, complement_path;
    std::string preset, oracle_path, family = "elliptic", mode = "union3", dump_path;
    std::string flavor = "int", out_path;
    std::uint64_t budget = 500, seed = 0, points = 32, facts = 64, primes = 16;
    unsigned count = 3;

    auto* im = app.add_subcommand("ideal-member", "decide membership in a polynomial ideal");
    im->add_option("--ideal", ideal_path)->required();
    im->add_option("--poly", poly_path)->required();

    auto* fd = app.add_subcommand("fn-defined", "is a rational function defined on an open");
    fd->add_option("--variety", variety_path)->required();
    fd->add_option("--fn", fn_path)->required();
    fd->add_option("--complement", complement_path)->required();

    auto* fc = app.add_subcommand("fn-constant", "decide constancy of a rational function");
    fc->add_option("--variety", variety_path)->required();
    fc->add_option("--fn", fn_path)->required();
    fc->add_option("--budget", budget);

    auto* sc = app.add_subcommand("sheaf-check", "run a canonical sheaf-axiom probe family");
    sc->add_option("--preset", preset)->required();

    auto* fam_cmd = app.add_subcommand("family", "generate curve families");
    fam_cmd->require_subcommand(1);
    auto* ge = fam_cmd->add_subcommand("gen-elliptic", "y^2 = x^3 + x + n fibers");
    ge->add_option("--count", count)->required();
    auto* gs = fam_cmd->add_subcommand("gen-super", "y^d = (x+1)(x+2) curves");
    gs->add_option("--count", count)->required();
    auto* ga = fam_cmd->add_subcommand("gen-appendix", "non-isogenous congruence family");
    ga->add_option("--count", count)->required();

    auto* en = app.add_subcommand("encode", "build A_X and dump a seeded copy");
    en->add_option("--oracle", oracle_path)->required();
    en->add_option("--family", family);
    en->add_option("--mode", mode);
    en->add_option("--seed", seed);
    en->add_option("--points", points);
    en->add_option("--facts", facts);
    en->add_option("--appendix-count", count);
    en->add_option("--out", out_path);

    auto* de = app.add_subcommand("decode", "recover the index set from a copy dump");
    de->add_option("--dump", dump_path)->required();
    de->add_option("--family", family);
    de->add_option("--appendix-count", count);

    auto* rt = app.add_subcommand("roundtrip", "encode, copy, decode and audit");
    rt->add_option("--oracle", oracle_path)->required();
    rt->add_option("--family", family);
    rt->add_option("--mode", mode);
    rt->add_option("--seed", seed);
    rt->add_option("--appendix-count", count);

    auto* sch = app.add_subcommand("scheme", "spectrum encoders");
    sch->require_subcommand(1);
    auto* sb = sch->add_subcommand("build", "dump a Z_X spectrum prefix");
    sb->add_option("--oracle", oracle_path)->required();
    sb->add_option("--flavor", flavor);
    sb->add_option("--primes", primes);
    auto* sp = sch->add_subcommand("probe", "answer ASK lines from stdin");
    sp->add_option("--oracle", oracle_path)->required();
    sp->add_option("--flavor", flavor);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message
        return 2;
    }

    try {
        if (*im) return run_ideal_member(ideal_path, poly_path);
        if (*fd) return run_fn_defined(variety_path, fn_path, complement_path);
        if (*fc) return run_fn_constant(variety_path, fn_path, budget);
        if (*sc) return run_sheaf_check(preset);
        if (*ge) {
            io::write_elliptic_family(std::cout, count);
            return 0;
        }
        if (*gs) {
            io::write_super_family(std::cout, count);
            return 0;
        }
        if (*ga) {
            io::write_appendix_family(std::cout, curves::appendix_A_sequence(count));
            return 0;
        }
        if (*en) return run_encode(oracle_path, family, mode, seed, points, facts, count, out_path);
        if (*de) return run_decode(dump_path, family, count);
        if (*rt) return run_roundtrip(oracle_path, family, mode, seed, count);
        if (*sb) return run_scheme_build(oracle_path, flavor, primes);
        if (*sp) return run_scheme_probe(oracle_path, flavor);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand selected\n";
    return 2;
}
