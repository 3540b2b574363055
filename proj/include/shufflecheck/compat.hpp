#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shufflecheck/permutation.hpp"
#include "shufflecheck/shuffles.hpp"
#include "shufflecheck/stat_value.hpp"
#include "shufflecheck/statistic.hpp"

namespace shufflecheck {

enum class CheckMode { shuffle, left_shuffle, descent };

std::string_view to_string(CheckMode mode);
CheckMode parse_mode(std::string_view text);  // "shuffle" | "left" | "descent"

// The quadruple Definition 1 quantifies over. The pair (st(sigma), st(phi))
// is ordered; the swapped group's consistency is a consequence of shuffle
// symmetry, not an assumption.
struct GroupKey {
    StatValue st_sigma, st_phi;
    int size_sigma = 0, size_phi = 0;

    std::string to_string() const;
    friend bool operator==(const GroupKey&, const GroupKey&) = default;
    friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

// Two pairs in the same group whose value multisets differ. pair1 is the
// group's first pair in enumeration order, pair2 the first pair that
// disagrees with it.
struct ShuffleWitness {
    Permutation sigma1, phi1;
    Permutation sigma2, phi2;
    GroupKey group;
    ValueMultiset values1, values2;

    friend bool operator==(const ShuffleWitness&, const ShuffleWitness&) = default;
};

// Two same-size permutations with equal descent sets and different
// statistic values.
struct DescentWitness {
    Permutation perm1, perm2;
    DescentSet descents;
    StatValue value1, value2;

    friend bool operator==(const DescentWitness&, const DescentWitness&) = default;
};

using Witness = std::variant<ShuffleWitness, DescentWitness>;

// Verdict plus the witness of the first violation (when any) and the
// number of groups examined before stopping. "compatible-up-to-bound" is
// deliberately not a claim about sizes beyond the bound.
struct CompatReport {
    std::string statistic;
    CheckMode mode = CheckMode::shuffle;
    int bound = 0;
    bool violated = false;
    std::optional<ShuffleWitness> shuffle_witness;
    std::optional<DescentWitness> descent_witness;
    std::uint64_t groups_examined = 0;
    double wall_ms = 0.0;  // informational; excluded from default serialization

    std::string_view verdict() const { return violated ? "violated" : "compatible-up-to-bound"; }

    friend bool operator==(const CompatReport& a, const CompatReport& b);
};

int default_hard_cap();  // 10, or SHUFFLECHECK_HARD_CAP when set

struct CheckOptions {
    // 1 selects the serial reference engine; 0 means all available cores.
    // Reports are identical regardless (candidate witnesses are merged by
    // minimum enumeration index).
    int jobs = 0;
    int hard_cap = default_hard_cap();
};

// Exhaustive bounded check of Definition 1: for every ordered size pair
// (m, n) with m+n <= max_total_size, every pair (sigma, phi) whose entries
// partition {1..m+n} is evaluated (value-partition enumeration suffices
// for permutation statistics), grouped by GroupKey; within a group all
// shuffle value multisets must coincide. Enumeration order: size pairs
// ascending by total then by m; subsets lexicographic; arrangements
// lexicographic. Throws std::invalid_argument when max_total_size exceeds
// the hard cap (cost grows as (m+n)!).
CompatReport check_shuffle_compatible(const Statistic& st, int max_total_size,
                                      const CheckOptions& options = {});

// Same grouping over the multisets restricted to shuffles starting with
// sigma's first entry; pairs with empty sigma are skipped.
CompatReport check_left_shuffle_compatible(const Statistic& st, int max_total_size,
                                           const CheckOptions& options = {});

// For each n <= max_size partitions the n! standardized permutations by
// descent set; violated iff some class holds two different values.
CompatReport check_descent_statistic(const Statistic& st, int max_size,
                                     const CheckOptions& options = {});

CompatReport run_check(const Statistic& st, CheckMode mode, int bound,
                       const CheckOptions& options = {});

// Only the witness from the corresponding check; absent when
// compatible-up-to-bound.
std::optional<Witness> find_witness(const Statistic& st, CheckMode mode, int bound,
                                    const CheckOptions& options = {});

// --- Table 1 and the proposition-proof identities ---------------------

struct Table1Row {
    Permutation sigma, phi;
    std::vector<Permutation> plus, minus;  // sorted

    std::string label() const;  // "134 x 2"
};

// The table embedded from the paper: 6 rows of 3 ⧢ 1 pairs and 6 rows of
// 2 ⧢ 2 pairs, partitioned by the sign of psi.
const std::vector<Table1Row>& paper_table1();

// One row with a +1/-1 entry swapped; negative control for the
// reproduction pipeline.
std::vector<Table1Row> corrupted_table1();

struct Table1Result {
    bool ok = false;
    std::vector<std::string> discrepancies;  // one line per mismatching row
};

// Recomputes the psi-partition of every row's shuffle set and compares it
// with `expected` as sets.
Table1Result verify_table1(const std::vector<Table1Row>& expected = paper_table1());

struct IdentityResult {
    bool ok = false;
    std::vector<std::string> checks;  // one line per identity checked
};

// The two multiset identities from the size-3 proposition proof,
// {{st over 12⧢3}} = {{st over 13⧢2}} and {{st over 23⧢1}} = {{st over
// 13⧢2}}, for every registered statistic claimed shuffle compatible, plus
// the same identities at the level of descent-set multisets.
IdentityResult verify_prop1_identities(const Registry& registry = builtin_registry());

}  // namespace shufflecheck
