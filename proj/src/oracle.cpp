#include "ringbench/oracle.hpp"

#include <stdexcept>

namespace ringbench::harness {

OracleSet OracleSet::finite(std::set<std::uint64_t> members) {
    OracleSet o;
    o.backing_ = Backing::finite;
    o.set_ = std::move(members);
    return o;
}

OracleSet OracleSet::cofinite(std::set<std::uint64_t> complement) {
    OracleSet o;
    o.backing_ = Backing::cofinite;
    o.set_ = std::move(complement);
    return o;
}

OracleSet OracleSet::rule(std::string name, std::function<bool(std::uint64_t)> predicate) {
    OracleSet o;
    o.backing_ = Backing::rule;
    o.rule_name_ = std::move(name);
    o.predicate_ = std::move(predicate);
    return o;
}

bool OracleSet::member(std::uint64_t n) const {
    bool answer = false;
    switch (backing_) {
        case Backing::finite: answer = set_.count(n) > 0; break;
        case Backing::cofinite: answer = set_.count(n) == 0; break;
        case Backing::rule: answer = predicate_(n); break;
    }
    log_.push_back({n, answer});
    return answer;
}

std::optional<std::size_t> OracleSet::cardinality() const {
    if (backing_ == Backing::finite) return set_.size();
    return std::nullopt;
}

const std::set<std::uint64_t>& OracleSet::finite_members() const {
    if (backing_ != Backing::finite) throw std::domain_error("oracle is not finitely backed");
    return set_;
}

const std::set<std::uint64_t>& OracleSet::cofinite_complement() const {
    if (backing_ != Backing::cofinite) throw std::domain_error("oracle is not co-finitely backed");
    return set_;
}

std::optional<std::uint64_t> OracleSet::member_at(std::size_t idx) const {
    switch (backing_) {
        case Backing::finite: {
            if (idx >= set_.size()) return std::nullopt;
            auto it = set_.begin();
            std::advance(it, idx);
            return *it;
        }
        case Backing::cofinite: {
            std::uint64_t n = 1;
            std::size_t seen = 0;
            while (true) {
                if (set_.count(n) == 0) {
                    if (seen == idx) return n;
                    ++seen;
                }
                ++n;
            }
        }
        case Backing::rule: {
            std::uint64_t n = 1;
            std::size_t seen = 0;
            // rules are total and deterministic; scan ascending
            while (n < (1ULL << 32)) {
                if (predicate_(n)) {
                    if (seen == idx) return n;
                    ++seen;
                }
                ++n;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

bool CachedOracle::member(std::uint64_t n) const {
    if (yes_.count(n)) return true;
    if (no_.count(n)) return false;
    bool answer = oracle_->member(n);
    (answer ? yes_ : no_).insert(n);
    return answer;
}

}  // namespace ringbench::harness
