#include "shufflecheck/enumeration.hpp"

#include <limits>
#include <stdexcept>

namespace shufflecheck {

std::uint64_t binomial_checked(int n, int k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("binomial arguments must be nonnegative");
    }
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t factorial_checked(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial argument must be nonnegative");
    }
    if (n > 20) {
        throw std::overflow_error("factorial(" + std::to_string(n) + ") exceeds 64 bits");
    }
    std::uint64_t result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= static_cast<std::uint64_t>(i);
    }
    return result;
}

namespace enumeration {

void unrank_combination(int n, int k, std::uint64_t rank, std::vector<int>& out) {
    out.clear();
    out.reserve(static_cast<size_t>(k));
    int next = 0;
    for (int remaining = k; remaining > 0; --remaining) {
        // Smallest candidate c such that rank falls inside the block of
        // subsets starting with c.
        while (true) {
            std::uint64_t block = binomial_checked(n - next - 1, remaining - 1);
            if (rank < block) {
                break;
            }
            rank -= block;
            ++next;
        }
        out.push_back(next);
        ++next;
    }
}

void unrank_permutation(std::span<const int> sorted_values, std::uint64_t rank,
                        std::vector<int>& out) {
    const int n = static_cast<int>(sorted_values.size());
    out.assign(sorted_values.begin(), sorted_values.end());
    std::vector<int> pool(out);
    std::uint64_t radix = factorial_checked(n);
    for (int i = 0; i < n; ++i) {
        radix /= static_cast<std::uint64_t>(n - i);
        std::uint64_t digit = rank / radix;
        rank %= radix;
        out[static_cast<size_t>(i)] = pool[static_cast<size_t>(digit)];
        pool.erase(pool.begin() + static_cast<long>(digit));
    }
}

bool next_combination(std::vector<int>& positions, int n) {
    const int k = static_cast<int>(positions.size());
    int i = k - 1;
    while (i >= 0 && positions[static_cast<size_t>(i)] == n - k + i) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++positions[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
        positions[static_cast<size_t>(j)] = positions[static_cast<size_t>(j - 1)] + 1;
    }
    return true;
}

}  // namespace enumeration

}  // namespace shufflecheck
