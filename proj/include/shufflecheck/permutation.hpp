#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shufflecheck {

// A permutation here is a finite sequence of pairwise distinct integers,
// not a bijection under composition. Positions are 1-based in every
// externally visible value (descents, inversions, reports); storage is
// 0-based.
class Permutation {
public:
    Permutation() = default;

    // Validates distinctness; throws std::invalid_argument on duplicates.
    explicit Permutation(std::vector<int> entries);

    // Accepts the compact digit form ("2413", digits 1..9 only) and the
    // comma-separated form ("12,9,40"; one trailing comma allowed so that
    // single-entry permutations like "12," stay unambiguous). The empty
    // string is the empty permutation.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // 1-based access.
    int entry(int pos) const { return entries_[static_cast<size_t>(pos - 1)]; }
    const std::vector<int>& entries() const { return entries_; }

    // Compact digit string when every entry is in 1..9, comma-separated
    // otherwise; "" for the empty permutation.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    // Fast path for callers that guarantee distinctness (shuffle
    // enumeration interleaves disjoint inputs, so every output is valid).
    static Permutation unchecked(std::vector<int> entries);

private:
    struct unchecked_tag {};
    Permutation(std::vector<int> entries, unchecked_tag) : entries_(std::move(entries)) {}

    friend class ShuffleCursor;  // rewrites entries_ in place while streaming

    std::vector<int> entries_;
};

// Sorted 1-based positions i with sigma_i > sigma_{i+1}; each in [1, n-1].
struct DescentSet {
    std::vector<int> positions;

    std::string to_string() const;  // "{2,3}", "{}" when empty
    friend bool operator==(const DescentSet&, const DescentSet&) = default;
    friend auto operator<=>(const DescentSet&, const DescentSet&) = default;
};

// Sorted 1-based position pairs (i, j), i < j, with sigma_i > sigma_j.
struct InversionSet {
    std::vector<std::pair<int, int>> pairs;

    std::string to_string() const;  // "{(1,2),(1,3)}", "{}" when empty
    friend bool operator==(const InversionSet&, const InversionSet&) = default;
    friend auto operator<=>(const InversionSet&, const InversionSet&) = default;
};

// The unique permutation of {1..n} with the same relative order: each entry
// is replaced by its rank among all entries.
Permutation standardize(const Permutation& p);

// Same size and same relative order.
bool equivalent(const Permutation& p, const Permutation& q);

DescentSet descent_set(const Permutation& p);
InversionSet inversion_set(const Permutation& p);

// True iff the entry sets do not intersect.
bool disjoint(const Permutation& p, const Permutation& q);

}  // namespace shufflecheck
