#include "shufflecheck/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shufflecheck {

namespace {

void require_distinct(const std::vector<int>& entries) {
    std::vector<int> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw std::invalid_argument("permutation entries must be distinct (duplicate " +
                                    std::to_string(*dup) + ")");
    }
}

int parse_int_token(std::string_view token) {
    size_t begin = token.find_first_not_of(" \t");
    size_t end = token.find_last_not_of(" \t");
    if (begin == std::string_view::npos) {
        throw std::invalid_argument("empty entry in permutation string");
    }
    token = token.substr(begin, end - begin + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("cannot parse permutation entry '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    require_distinct(entries_);
}

Permutation Permutation::unchecked(std::vector<int> entries) {
    return Permutation(std::move(entries), unchecked_tag{});
}

Permutation Permutation::parse(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    if (begin == std::string_view::npos) {
        return Permutation{};
    }
    size_t end = text.find_last_not_of(" \t");
    text = text.substr(begin, end - begin + 1);

    bool compact = std::all_of(text.begin(), text.end(),
                               [](char c) { return c >= '1' && c <= '9'; });
    std::vector<int> entries;
    if (compact) {
        entries.reserve(text.size());
        for (char c : text) {
            entries.push_back(c - '0');
        }
    } else {
        if (text.back() == ',') {  // "12," denotes the singleton (12)
            text.remove_suffix(1);
            if (text.empty()) {
                throw std::invalid_argument("empty entry in permutation string");
            }
        }
        size_t pos = 0;
        while (true) {
            size_t comma = text.find(',', pos);
            entries.push_back(parse_int_token(text.substr(pos, comma - pos)));
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
    }
    return Permutation(std::move(entries));
}

std::string Permutation::to_string() const {
    bool compact = std::all_of(entries_.begin(), entries_.end(),
                               [](int v) { return v >= 1 && v <= 9; });
    std::string out;
    if (compact) {
        for (int v : entries_) {
            out.push_back(static_cast<char>('0' + v));
        }
        return out;
    }
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(entries_[i]);
    }
    // A lone multi-digit entry like "12" would re-parse as the compact form;
    // the trailing comma keeps the text form round-trippable.
    if (entries_.size() == 1 &&
        std::all_of(out.begin(), out.end(), [](char c) { return c >= '1' && c <= '9'; })) {
        out.push_back(',');
    }
    return out;
}

std::string DescentSet::to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < positions.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(positions[i]);
    }
    out.push_back('}');
    return out;
}

std::string InversionSet::to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    out.push_back('}');
    return out;
}

Permutation standardize(const Permutation& p) {
    const auto& entries = p.entries();
    const int n = p.size();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return entries[static_cast<size_t>(a)] < entries[static_cast<size_t>(b)]; });
    std::vector<int> out(static_cast<size_t>(n));
    for (int rank = 0; rank < n; ++rank) {
        out[static_cast<size_t>(order[static_cast<size_t>(rank)])] = rank + 1;
    }
    return Permutation::unchecked(std::move(out));
}

bool equivalent(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) {
        return false;
    }
    return standardize(p) == standardize(q);
}

DescentSet descent_set(const Permutation& p) {
    DescentSet out;
    const auto& e = p.entries();
    for (size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i] > e[i + 1]) {
            out.positions.push_back(static_cast<int>(i) + 1);
        }
    }
    return out;
}

InversionSet inversion_set(const Permutation& p) {
    InversionSet out;
    const auto& e = p.entries();
    for (size_t i = 0; i < e.size(); ++i) {
        for (size_t j = i + 1; j < e.size(); ++j) {
            if (e[i] > e[j]) {
                out.pairs.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
            }
        }
    }
    return out;
}

bool disjoint(const Permutation& p, const Permutation& q) {
    std::vector<int> a = p.entries();
    std::vector<int> b = q.entries();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.empty();
}

}  // namespace shufflecheck
