#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shufflecheck/permutation.hpp"
#include "shufflecheck/stat_value.hpp"

namespace shufflecheck {

// A named, equivalence-invariant map Permutation -> StatValue. Statistics
// restricted to one size (inv12, adj34, lambda) reject other sizes with
// std::domain_error instead of defaulting; only psi totalizes.
struct Statistic {
    std::string name;
    StatValue::Kind kind = StatValue::Kind::integer;
    std::optional<int> required_size;  // set for inv12/adj34/lambda (4)
    // Established shuffle-compatible under test; selects the statistics the
    // size-3 multiset identities are checked against.
    bool claimed_shuffle_compatible = false;
    std::function<StatValue(const Permutation&)> eval;

    StatValue operator()(const Permutation& p) const { return eval(p); }
};

// The paper's statistics. The restricted ones throw std::domain_error
// unless |p| == 4.
StatValue stat_one(const Permutation& p);     // constant 1
StatValue stat_des(const Permutation& p);     // descent set
StatValue stat_inv(const Permutation& p);     // inversion set (as a set, not a count)
StatValue stat_inv12(const Permutation& p);   // +1 iff the smallest entry precedes the second smallest
StatValue stat_adj34(const Permutation& p);   // +1 iff the two largest entries are adjacent
StatValue stat_lambda(const Permutation& p);  // inv12 * adj34
StatValue stat_psi(const Permutation& p);     // lambda on size 4, 1 otherwise

// Name -> Statistic table. Built-ins are registered at construction;
// registration precedes evaluation, after which the registry is used as
// const (no locking needed, statistics are pure).
class Registry {
public:
    Registry();

    // Throws std::invalid_argument listing the registered names.
    const Statistic& lookup(std::string_view name) const;

    std::vector<std::string> names() const;

    // Rejects duplicates and non-statistics: the candidate is evaluated on
    // sampled random order-preserving relabelings (sizes <= 5, or the
    // required size) and must be constant on equivalence classes.
    void register_statistic(Statistic st);

private:
    std::map<std::string, Statistic, std::less<>> stats_;
};

// The registry holding the seven paper statistics.
const Registry& builtin_registry();

}  // namespace shufflecheck
