#include "ringbench/io.hpp"

#include <fstream>
#include <sstream>

namespace ringbench::io {

using namespace exactalg;

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool is_comment(const std::string& line) { return line.empty() || line[0] == '#'; }

ExtensionHandle parse_ext_header(const std::string& payload) {
    // the minimal polynomial is univariate in t; parse it by renaming t -> x1
    std::string renamed;
    for (std::size_t i = 0; i < payload.size(); ++i) {
        if (payload[i] == 't') renamed += "x1";
        else renamed += payload[i];
    }
    SparsePolynomial p = SparsePolynomial::parse(renamed, 1);
    std::vector<Rat> coeffs;
    for (const FieldElement& c : dense_univariate(p)) coeffs.push_back(c.rational());
    return std::make_shared<ExtensionDescriptor>(std::move(coeffs));
}

struct ParsedLines {
    ExtensionHandle ext;
    unsigned declared_vars = 0;
    std::vector<std::string> body;
};

ParsedLines read_lines(std::istream& in) {
    ParsedLines out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (is_comment(line)) continue;
        if (line.rfind("ext:", 0) == 0) {
            out.ext = parse_ext_header(trim(line.substr(4)));
            continue;
        }
        if (line.rfind("vars:", 0) == 0) {
            out.declared_vars = static_cast<unsigned>(std::stoul(trim(line.substr(5))));
            continue;
        }
        out.body.push_back(line);
    }
    return out;
}

unsigned body_vars(const ParsedLines& lines, unsigned min_vars) {
    unsigned n = std::max(lines.declared_vars, min_vars);
    for (const std::string& s : lines.body)
        n = std::max(n, SparsePolynomial::max_variable_index(s));
    return n;
}

}  // namespace

IdealFile read_ideal(std::istream& in) {
    ParsedLines lines = read_lines(in);
    IdealFile out;
    out.ext = lines.ext;
    out.nvars = body_vars(lines, 1);
    std::vector<SparsePolynomial> gens;
    for (const std::string& s : lines.body)
        gens.push_back(SparsePolynomial::parse(s, out.nvars, MonomialOrder::grevlex, out.ext));
    out.ideal = IdealPresentation(out.nvars, std::move(gens));
    return out;
}

IdealFile read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ideal file: " + path);
    return read_ideal(in);
}

void write_ideal(std::ostream& out, const IdealPresentation& ideal, const ExtensionHandle& ext) {
    if (ext) out << "ext: " << ext->min_poly_text() << "\n";
    out << "vars: " << ideal.variable_count() << "\n";
    for (const SparsePolynomial& g : ideal.generators()) out << g.to_string() << "\n";
}

PolyFile read_poly_file(const std::string& path, unsigned min_vars) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
    ParsedLines lines = read_lines(in);
    if (lines.body.empty()) throw std::runtime_error("no polynomial in " + path);
    PolyFile out;
    out.ext = lines.ext;
    out.nvars = body_vars(lines, std::max(min_vars, 1u));
    out.poly = SparsePolynomial::parse(lines.body[0], out.nvars, MonomialOrder::grevlex, out.ext);
    return out;
}

VarietyFile read_variety_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open variety file: " + path);
    std::string line;
    unsigned ambient = 0;
    std::ostringstream rest;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.rfind("ambient:", 0) == 0) {
            ambient = static_cast<unsigned>(std::stoul(trim(t.substr(8))));
            continue;
        }
        rest << line << "\n";
    }
    if (ambient == 0) throw std::runtime_error("variety file missing the ambient header");
    std::istringstream body(rest.str());
    ParsedLines lines = read_lines(body);
    std::vector<SparsePolynomial> gens;
    for (const std::string& s : lines.body)
        gens.push_back(SparsePolynomial::parse(s, ambient, MonomialOrder::grevlex, lines.ext));
    VarietyFile out{lines.ext,
                    geometry::VarietyPresentation(ambient, IdealPresentation(ambient, gens))};
    return out;
}

FractionFile read_fraction_file(const std::string& path, unsigned min_vars) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open function file: " + path);
    ParsedLines lines = read_lines(in);
    if (lines.body.empty()) throw std::runtime_error("no function in " + path);
    FractionFile out;
    out.ext = lines.ext;
    out.nvars = body_vars(lines, std::max(min_vars, 1u));
    out.fraction = Fraction::parse(lines.body[0], out.nvars, MonomialOrder::grevlex, out.ext);
    return out;
}

harness::OracleHandle read_oracle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open oracle file: " + path);
    std::string line;
    std::optional<bool> finite;
    std::set<std::uint64_t> indices;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (is_comment(t)) continue;
        if (!finite) {
            if (t == "finite") finite = true;
            else if (t == "infinite") finite = false;
            else throw std::runtime_error("oracle file must start with finite|infinite");
            continue;
        }
        indices.insert(std::stoull(t));
    }
    if (!finite) throw std::runtime_error("oracle file is empty");
    return std::make_shared<harness::OracleSet>(
        *finite ? harness::OracleSet::finite(std::move(indices))
                : harness::OracleSet::cofinite(std::move(indices)));
}

void write_oracle(std::ostream& out, const harness::OracleSet& oracle) {
    if (oracle.is_finite()) {
        out << "finite\n";
        for (std::uint64_t n : oracle.finite_members()) out << n << "\n";
    } else {
        out << "infinite\n";
        for (std::uint64_t n : oracle.cofinite_complement()) out << n << "\n";
    }
}

void write_elliptic_family(std::ostream& out, unsigned count) {
    out << "seed-free\n";
    for (const auto& curve : curves::elliptic_family_gen(count))
        out << "ELLIPTIC " << curve.a().to_string() << " " << curve.b().to_string() << "\n";
}

void write_super_family(std::ostream& out, unsigned count) {
    out << "seed-free\n";
    for (const auto& curve : curves::superelliptic_family_gen(count))
        out << "SUPER " << curve.d << "\n";
}

void write_appendix_family(std::ostream& out, const curves::AppendixFamilyState& state) {
    out << "seed-free\n";
    for (const auto& curve : state.curves)
        out << "APPX " << curve.witness_prime.get_str() << " " << curve.a_value.get_str()
            << "\n";
}

std::string field_element_text(const FieldElement& v) { return v.to_string(); }

FieldElement parse_field_element(const std::string& text, const ExtensionHandle& ext) {
    std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty field element");
    if (t[0] != '(') return FieldElement(rat_from_string(t));
    // parenthesized extension element: reuse the polynomial parser with a
    // dummy variable count of 1
    SparsePolynomial p = SparsePolynomial::parse(t, 1, MonomialOrder::grevlex, ext);
    if (!p.is_constant()) throw std::invalid_argument("not a field element: " + text);
    return p.constant_value();
}

void write_copy_dump(std::ostream& out, const harness::CopyPresentation& copy,
                     std::uint64_t points, std::uint64_t facts) {
    out << "PERM " << copy.seed() << "\n";
    std::vector<std::optional<geometry::PointOnVariety>> cached;
    for (std::uint64_t id = 0; id < points; ++id) {
        auto p = copy.point_at(id);
        cached.push_back(p);
        if (!p) break;
        out << "POINT " << id;
        ExtensionHandle ext;
        for (std::size_t k = 0; k < p->coords.size(); ++k) {
            out << (k ? " ; " : " ") << field_element_text(p->coords[k]);
            if (!p->coords[k].is_rational()) ext = p->coords[k].extension_handle();
        }
        if (ext) out << " ; ext: " << ext->min_poly_text();
        out << "\n";
    }
    // a prefix of true point facts over the dumped constants
    std::uint64_t emitted = 0;
    for (std::uint64_t id = 0; id < cached.size() && emitted < facts; ++id) {
        if (!cached[id]) break;
        spaces::LRSentence s;
        s.shape = spaces::LRSentence::Shape::point_in_open;
        s.a = id;
        s.open_u = 0;
        out << s.to_string() << "\n";
        ++emitted;
        if (id > 0 && emitted < facts) {
            s.open_u = 1;
            out << s.to_string() << "\n";
            ++emitted;
        }
    }
}

CopyDump read_copy_dump(std::istream& in) {
    CopyDump out;
    std::string line;
    bool have_perm = false;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (is_comment(t)) continue;
        if (t.rfind("PERM ", 0) == 0) {
            out.seed = std::stoull(t.substr(5));
            have_perm = true;
            continue;
        }
        if (t.rfind("POINT ", 0) == 0) {
            std::istringstream is(t.substr(6));
            std::uint64_t id;
            is >> id;
            std::string rest;
            std::getline(is, rest);
            // split on " ; "
            std::vector<std::string> parts;
            std::size_t pos = 0;
            rest = trim(rest);
            while (true) {
                std::size_t sep = rest.find(" ; ", pos);
                if (sep == std::string::npos) {
                    parts.push_back(trim(rest.substr(pos)));
                    break;
                }
                parts.push_back(trim(rest.substr(pos, sep - pos)));
                pos = sep + 3;
            }
            ExtensionHandle ext;
            if (!parts.empty() && parts.back().rfind("ext:", 0) == 0) {
                ext = parse_ext_header(trim(parts.back().substr(4)));
                parts.pop_back();
            }
            geometry::PointOnVariety p;
            for (const std::string& coord : parts)
                p.coords.push_back(parse_field_element(coord, ext));
            if (out.points.size() != id)
                throw std::runtime_error("point ids out of order in the dump");
            out.points.push_back(std::move(p));
            continue;
        }
        out.facts.push_back(spaces::LRSentence::parse(t));
    }
    if (!have_perm) throw std::runtime_error("copy dump missing the PERM header");
    return out;
}

void write_scheme_dump(std::ostream& out, const schemes::SpecPresentation& spec,
                       const std::string& oracle_path, std::uint64_t prime_count) {
    out << "oracle " << oracle_path << "\n";
    out << "flavor "
        << (spec.flavor() == schemes::SpecPresentation::Flavor::integer_valuations ? "int"
                                                                                   : "lin")
        << "\n";
    for (std::uint64_t i = 0; i < prime_count; ++i) {
        auto p = spec.prime_at(i);
        if (!p) break;
        out << p->to_string() << "\n";
    }
}

}  // namespace ringbench::io
