#pragma once

// The set X behind every encoding, queried through a logged membership
// interface. Backings: finite explicit set, co-finite complement, or a
// named deterministic rule. The log is append-only and single-writer.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ringbench::harness {

struct OracleEntry {
    std::uint64_t query;
    bool answer;
};

class OracleSet {
  public:
    static OracleSet finite(std::set<std::uint64_t> members);
    static OracleSet cofinite(std::set<std::uint64_t> complement);
    /// Deterministic rule with a name, e.g. "evens". Rule-backed sets are
    /// treated as infinite by the consumers that branch on cardinality.
    static OracleSet rule(std::string name, std::function<bool(std::uint64_t)> predicate);

    /// Membership query; appends one log entry (repeats log again).
    bool member(std::uint64_t n) const;

    bool is_finite() const { return backing_ == Backing::finite; }
    /// Cardinality for finite backings only.
    std::optional<std::size_t> cardinality() const;
    const std::set<std::uint64_t>& finite_members() const;
    const std::set<std::uint64_t>& cofinite_complement() const;
    const std::string& rule_name() const { return rule_name_; }

    /// idx-th member (0-based) in ascending order, without touching the
    /// membership log: the positive-information interface used by the
    /// enumeration-reducibility mode.
    std::optional<std::uint64_t> member_at(std::size_t idx) const;

    const std::vector<OracleEntry>& log() const { return log_; }
    std::size_t query_count() const { return log_.size(); }
    void clear_log() { log_.clear(); }

  private:
    enum class Backing { finite, cofinite, rule } backing_ = Backing::finite;
    std::set<std::uint64_t> set_;  // members or complement
    std::function<bool(std::uint64_t)> predicate_;
    std::string rule_name_;
    mutable std::vector<OracleEntry> log_;
};

using OracleHandle = std::shared_ptr<OracleSet>;

/// Memoizing wrapper: at most one underlying query per distinct index.
/// Servers use this to keep their query accounting parsimonious.
class CachedOracle {
  public:
    explicit CachedOracle(OracleHandle oracle) : oracle_(std::move(oracle)) {}
    bool member(std::uint64_t n) const;
    const OracleHandle& underlying() const { return oracle_; }

  private:
    OracleHandle oracle_;
    mutable std::set<std::uint64_t> yes_, no_;
};

}  // namespace ringbench::harness
