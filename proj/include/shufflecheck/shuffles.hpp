#pragma once

#include <cstdint>
#include <vector>

#include "shufflecheck/enumeration.hpp"
#include "shufflecheck/permutation.hpp"
#include "shufflecheck/stat_value.hpp"
#include "shufflecheck/statistic.hpp"

namespace shufflecheck {

// Shuffle sets are materialized eagerly only up to this total size by
// default; larger sets must be consumed through ShuffleCursor.
inline constexpr int kDefaultMaterializeBound = 12;

// binomial(m+n, m): the cardinality of the shuffle set of disjoint
// permutations of sizes m and n. Throws std::overflow_error past 64 bits.
std::uint64_t shuffle_count(int m, int n);

// Streaming enumeration of sigma ⧢ phi in lexicographic order of the
// position subsets assigned to sigma's entries. With left_only, only
// interleavings starting with sigma's first entry are produced (position
// subsets containing position 1), which is a subsequence of the same
// order. Disjointness is checked at construction; left_only additionally
// requires sigma to be nonempty.
class ShuffleCursor {
public:
    ShuffleCursor(const Permutation& sigma, const Permutation& phi, bool left_only = false);

    // The next interleaving, or nullptr when exhausted. The pointee is
    // reused: it stays valid only until the next call.
    const Permutation* next();

    std::uint64_t count() const;  // total number of elements produced

private:
    void fill_current();

    std::vector<int> sigma_, phi_;
    std::vector<int> positions_;  // 0-based positions of sigma's entries
    int total_ = 0;
    bool left_only_ = false;
    bool done_ = false;
    bool started_ = false;
    Permutation current_;
};

// All shuffles of two disjoint permutations, in cursor order.
struct ShuffleSet {
    Permutation sigma, phi;
    bool left_only = false;
    std::vector<Permutation> elements;
};

// Materializes sigma ⧢ phi. Throws std::invalid_argument on non-disjoint
// inputs and std::length_error when |sigma|+|phi| > materialize_bound.
ShuffleSet shuffle(const Permutation& sigma, const Permutation& phi,
                   int materialize_bound = kDefaultMaterializeBound);

// The subset of sigma ⧢ phi whose first entry is sigma's first entry.
// Additionally throws std::invalid_argument when sigma is empty.
ShuffleSet left_shuffle(const Permutation& sigma, const Permutation& phi,
                        int materialize_bound = kDefaultMaterializeBound);

// The multiset {{st(gamma) | gamma in s}}, canonically sorted.
ValueMultiset value_multiset(const ShuffleSet& s, const Statistic& st);

// Streaming variant: same multiset without materializing the set.
ValueMultiset value_multiset(const Permutation& sigma, const Permutation& phi,
                             bool left_only, const Statistic& st);

}  // namespace shufflecheck
