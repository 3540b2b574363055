#include "shufflecheck/statistic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

#include "shufflecheck/enumeration.hpp"

namespace shufflecheck {

namespace {

void require_size4(const Permutation& p, const char* name) {
    if (p.size() != 4) {
        throw std::domain_error(std::string(name) + " is defined only on size-4 permutations (got size " +
                                std::to_string(p.size()) + ")");
    }
}

// 0-based position of the k-th smallest entry (k 0-based).
int position_of_rank(const Permutation& p, int k) {
    std::vector<int> sorted = p.entries();
    std::sort(sorted.begin(), sorted.end());
    const int value = sorted[static_cast<size_t>(k)];
    const auto& e = p.entries();
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == value) {
            return static_cast<int>(i);
        }
    }
    return -1;  // unreachable: entries are distinct
}

}  // namespace

StatValue stat_one(const Permutation&) {
    return StatValue::of_int(1);
}

StatValue stat_des(const Permutation& p) {
    return StatValue::of_int_set(descent_set(p).positions);
}

StatValue stat_inv(const Permutation& p) {
    return StatValue::of_pair_set(inversion_set(p).pairs);
}

StatValue stat_inv12(const Permutation& p) {
    require_size4(p, "inv12");
    return StatValue::of_int(position_of_rank(p, 0) < position_of_rank(p, 1) ? 1 : -1);
}

StatValue stat_adj34(const Permutation& p) {
    require_size4(p, "adj34");
    const int d = position_of_rank(p, 2) - position_of_rank(p, 3);
    return StatValue::of_int(d == 1 || d == -1 ? 1 : -1);
}

StatValue stat_lambda(const Permutation& p) {
    require_size4(p, "lambda");
    return StatValue::of_int(stat_inv12(p).as_int() * stat_adj34(p).as_int());
}

StatValue stat_psi(const Permutation& p) {
    return p.size() == 4 ? stat_lambda(p) : StatValue::of_int(1);
}

namespace {

// Sampled check of the defining property st(p) = st(standardize(p)): apply
// random order-preserving relabelings of 1..n into a wider integer range.
void require_equivalence_invariant(const Statistic& st) {
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(-1000, 1000);

    std::vector<int> sizes;
    if (st.required_size) {
        sizes.push_back(*st.required_size);
    } else {
        sizes = {0, 1, 2, 3, 4, 5};
    }
    for (int n : sizes) {
        std::vector<int> identity(static_cast<size_t>(n));
        std::iota(identity.begin(), identity.end(), 1);
        const int samples = 20;
        for (int s = 0; s < samples; ++s) {
            std::vector<int> base = identity;
            std::shuffle(base.begin(), base.end(), rng);
            Permutation standardized = Permutation::unchecked(base);

            std::vector<int> labels;
            while (static_cast<int>(labels.size()) < n) {
                int candidate = pick(rng);
                if (std::find(labels.begin(), labels.end(), candidate) == labels.end()) {
                    labels.push_back(candidate);
                }
            }
            std::sort(labels.begin(), labels.end());
            std::vector<int> relabeled(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                relabeled[static_cast<size_t>(i)] =
                    labels[static_cast<size_t>(base[static_cast<size_t>(i)] - 1)];
            }
            Permutation q = Permutation::unchecked(relabeled);
            if (st.eval(standardized) != st.eval(q)) {
                throw std::invalid_argument(
                    "'" + st.name + "' is not a permutation statistic: st(" +
                    standardized.to_string() + ") = " + st.eval(standardized).to_string() +
                    " but st(" + q.to_string() + ") = " + st.eval(q).to_string() +
                    " on equivalent permutations");
            }
        }
    }
}

}  // namespace

Registry::Registry() {
    auto add = [&](std::string name, StatValue::Kind kind, std::optional<int> required_size,
                   bool shuffle_compatible, StatValue (*fn)(const Permutation&)) {
        stats_.emplace(name, Statistic{name, kind, required_size, shuffle_compatible, fn});
    };
    add("one", StatValue::Kind::integer, std::nullopt, true, &stat_one);
    add("des", StatValue::Kind::int_set, std::nullopt, true, &stat_des);
    add("inv", StatValue::Kind::pair_set, std::nullopt, false, &stat_inv);
    add("inv12", StatValue::Kind::integer, 4, false, &stat_inv12);
    add("adj34", StatValue::Kind::integer, 4, false, &stat_adj34);
    add("lambda", StatValue::Kind::integer, 4, false, &stat_lambda);
    add("psi", StatValue::Kind::integer, std::nullopt, true, &stat_psi);
}

const Statistic& Registry::lookup(std::string_view name) const {
    auto it = stats_.find(name);
    if (it == stats_.end()) {
        std::string msg = "unknown statistic '" + std::string(name) + "'; available:";
        for (const auto& [key, value] : stats_) {
            msg += " " + key;
        }
        throw std::invalid_argument(msg);
    }
    return it->second;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    out.reserve(stats_.size());
    for (const auto& [key, value] : stats_) {
        out.push_back(key);
    }
    return out;
}

void Registry::register_statistic(Statistic st) {
    if (st.name.empty() || !st.eval) {
        throw std::invalid_argument("statistic needs a name and an eval function");
    }
    if (stats_.contains(st.name)) {
        throw std::invalid_argument("statistic '" + st.name + "' is already registered");
    }
    require_equivalence_invariant(st);
    stats_.emplace(st.name, std::move(st));
}

const Registry& builtin_registry() {
    static const Registry registry;
    return registry;
}

}  // namespace shufflecheck
