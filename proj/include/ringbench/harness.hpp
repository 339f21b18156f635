#pragma once

// The reduction harness: atomic-diagram serving over presented
// structures with per-sentence oracle accounting, seeded isomorphic
// copies, the enumeration (positive-diagram) mode, and the full
// encode/decode round trips.

#include "ringbench/schemes.hpp"
#include "ringbench/spaces.hpp"

namespace ringbench::harness {

using exactalg::Fraction;
using exactalg::SparsePolynomial;
using spaces::LRSentence;

/// Deterministic unranking of ids into polynomials and fractions over Q.
/// id 0 is the zero polynomial; larger ids decode to term lists through
/// Cantor unpairing. Total, deterministic, not injective.
SparsePolynomial decode_polynomial(std::uint64_t id, unsigned nvars);
/// Pair-decoded numerator/denominator; a zero denominator code means 1.
Fraction decode_fraction(std::uint64_t id, unsigned nvars);

/// A seeded renaming of a structure's point universe: ids are permuted
/// block-wise (block size fixed), intrinsic point data is untouched.
class CopyPresentation {
  public:
    CopyPresentation(std::shared_ptr<const unions::UnionStructure> base, std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t permuted(std::uint64_t idx) const;
    std::optional<geometry::PointOnVariety> point_at(std::uint64_t idx) const;
    unions::PointSource source() const;
    const std::shared_ptr<const unions::UnionStructure>& base() const { return base_; }

    static constexpr std::uint64_t kBlock = 256;

  private:
    std::shared_ptr<const unions::UnionStructure> base_;
    std::uint64_t seed_;
};

/// Serves quantifier-free sentences over a union structure or a spectrum
/// presentation. Open ids decode to co-finite opens: the excluded points
/// (or primes) are those whose ids are the set bits of the open id.
class DiagramServer {
  public:
    explicit DiagramServer(std::shared_ptr<const unions::UnionStructure> structure);
    explicit DiagramServer(std::shared_ptr<const schemes::SpecPresentation> spectrum);

    struct Answer {
        bool truth = false;
        std::size_t queries = 0;  // oracle queries this sentence cost
    };

    Answer serve(const LRSentence& sentence);

    std::size_t sentences_served() const { return served_; }
    std::size_t total_queries() const;

    /// The documented per-sentence query bound.
    static std::uint64_t query_bound(const LRSentence& sentence);

  private:
    std::shared_ptr<const unions::UnionStructure> union_;
    std::shared_ptr<const schemes::SpecPresentation> spec_;
    std::size_t served_ = 0;

    bool eval_union(const LRSentence& s) const;
    bool eval_spec(const LRSentence& s) const;
    bool union_section_in(std::uint64_t fn_id, std::uint64_t open_id) const;
    unions::WeakOpen decode_open_union(std::uint64_t open_id) const;
    bool section_class_zero(const Fraction& f) const;
};

/// The positive-diagram enumeration mode: true sentences emitted in a
/// canonical order, computed from the oracle's member stream alone
/// (member_at), never from membership queries.
class EnumerationServer {
  public:
    EnumerationServer(unions::ComponentFamily family, OracleHandle oracle);

    /// The next true sentences, extending the internal stream.
    std::vector<LRSentence> emit(std::size_t count);
    /// Point ids are discovery-ordered; exposes the discovered points.
    const std::vector<geometry::PointOnVariety>& discovered_points() const { return points_; }
    std::size_t membership_queries() const { return oracle_->query_count(); }

  private:
    unions::ComponentFamily family_;
    OracleHandle oracle_;
    std::vector<geometry::PointOnVariety> points_;
    std::size_t member_cursor_ = 0;   // members pulled from the stream
    std::uint64_t diagonal_ = 0;      // dovetail progress
    std::vector<std::uint64_t> member_prefix_;
    std::vector<LRSentence> pending_;

    void advance();
};

struct RoundtripAudit {
    std::set<unsigned> recovered;
    std::size_t encode_queries = 0;
    std::size_t decode_queries = 0;
};

/// build_AX -> seeded copy -> enumerate_components; exact recovery of
/// finite X plus query accounting. The family must carry a passing
/// rigidity certificate over the scanned prefix.
RoundtripAudit roundtrip(const std::set<std::uint64_t>& x, unions::ComponentFamily family,
                         unions::UnionMode mode, std::uint64_t seed,
                         std::uint64_t budget = 4096);

/// Scheme-flavor round trip: Z_X membership probes 1/e(n) recover X.
RoundtripAudit scheme_roundtrip(const std::set<std::uint64_t>& x,
                                schemes::SpecPresentation::Flavor flavor, unsigned prefix);

}  // namespace ringbench::harness
