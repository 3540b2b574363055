#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace shufflecheck {

// binomial(n, k); throws std::overflow_error when the value does not fit
// in 64 bits, std::invalid_argument on negative arguments.
std::uint64_t binomial_checked(int n, int k);

// n!; throws std::overflow_error for n > 20.
std::uint64_t factorial_checked(int n);

namespace enumeration {

// rank-th k-subset of {0,..,n-1} in lexicographic order, written to `out`
// (resized to k). rank must be < binomial(n, k).
void unrank_combination(int n, int k, std::uint64_t rank, std::vector<int>& out);

// rank-th arrangement of `sorted_values` in lexicographic order (factorial
// number system), written to `out`. rank must be < |sorted_values|!.
void unrank_permutation(std::span<const int> sorted_values, std::uint64_t rank,
                        std::vector<int>& out);

// Advances `positions` (a sorted k-subset of {0,..,n-1}) to its
// lexicographic successor. Returns false when `positions` was the last
// subset. The k = 0 subset has no successor.
bool next_combination(std::vector<int>& positions, int n);

}  // namespace enumeration

}  // namespace shufflecheck
