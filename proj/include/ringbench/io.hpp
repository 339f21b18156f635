#pragma once

// The text file formats: ideal and polynomial files with optional
// extension headers, variety files, rational functions, oracle files,
// family listings, copy dumps and scheme dumps. All formats round-trip
// bit-exactly through the canonical printers.

#include "ringbench/curves.hpp"
#include "ringbench/geometry.hpp"
#include "ringbench/harness.hpp"
#include "ringbench/oracle.hpp"

#include <iosfwd>
#include <string>

namespace ringbench::io {

using exactalg::ExtensionHandle;
using exactalg::Fraction;
using exactalg::IdealPresentation;
using exactalg::SparsePolynomial;

struct IdealFile {
    ExtensionHandle ext;  // set when an `ext:` header was present
    unsigned nvars = 0;
    IdealPresentation ideal;
};

/// One polynomial per line, `#` comments, optional `ext: <minpoly in t>`
/// header. The variable count is the largest index mentioned (or the
/// explicit `vars: n` header).
IdealFile read_ideal(std::istream& in);
IdealFile read_ideal_file(const std::string& path);
void write_ideal(std::ostream& out, const IdealPresentation& ideal, const ExtensionHandle& ext);

/// A single polynomial (first non-comment line), same headers.
struct PolyFile {
    ExtensionHandle ext;
    unsigned nvars = 0;
    SparsePolynomial poly;
};
PolyFile read_poly_file(const std::string& path, unsigned min_vars = 0);

/// `ambient: n` header, then ideal lines.
struct VarietyFile {
    ExtensionHandle ext;
    geometry::VarietyPresentation variety;
};
VarietyFile read_variety_file(const std::string& path);

/// A rational function `num / den` (single line after headers).
struct FractionFile {
    ExtensionHandle ext;
    unsigned nvars = 0;
    Fraction fraction;
};
FractionFile read_fraction_file(const std::string& path, unsigned min_vars = 0);

/// Oracle files: `finite` lists the members, `infinite` lists the
/// complement of a co-finitely backed set. One index per line.
harness::OracleHandle read_oracle_file(const std::string& path);
void write_oracle(std::ostream& out, const harness::OracleSet& oracle);

/// Family listings under a `seed-free` header: `ELLIPTIC A B`,
/// `SUPER d`, `APPX p A`.
void write_elliptic_family(std::ostream& out, unsigned count);
void write_super_family(std::ostream& out, unsigned count);
void write_appendix_family(std::ostream& out, const curves::AppendixFamilyState& state);

/// Field element text helpers (round-tripping the extension clause).
std::string field_element_text(const exactalg::FieldElement& v);
exactalg::FieldElement parse_field_element(const std::string& text, const ExtensionHandle& ext);

/// Copy dumps: `PERM <seed>`, the renamed-constant table
/// (`POINT <id> <coord> ; <coord> ; ... [; ext: <minpoly>]`), then
/// diagram-fact lines.
void write_copy_dump(std::ostream& out, const harness::CopyPresentation& copy,
                     std::uint64_t points, std::uint64_t facts);

struct CopyDump {
    std::uint64_t seed = 0;
    std::vector<geometry::PointOnVariety> points;  // by dump id
    std::vector<spaces::LRSentence> facts;
};
CopyDump read_copy_dump(std::istream& in);

/// Scheme dumps: `oracle <path>` reference, flavor line, then PRIME
/// lines for the enumerated prefix.
void write_scheme_dump(std::ostream& out, const schemes::SpecPresentation& spec,
                       const std::string& oracle_path, std::uint64_t prime_count);

}  // namespace ringbench::io
