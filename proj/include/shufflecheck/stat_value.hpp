#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace shufflecheck {

// Tagged value domain shared by all statistics so heterogeneous statistics
// get one comparison and serialization path. Total order: Int < IntSet <
// PairSet, numeric/lexicographic within a variant (this is exactly
// std::variant's ordering with the alternatives in this declaration order).
class StatValue {
public:
    enum class Kind { integer = 0, int_set = 1, pair_set = 2 };

    using IntSet = std::vector<int>;                      // sorted ascending
    using PairSet = std::vector<std::pair<int, int>>;     // sorted ascending

    StatValue() : value_(std::int64_t{0}) {}

    static StatValue of_int(std::int64_t v) { return StatValue(v); }
    static StatValue of_int_set(IntSet s);    // sorts
    static StatValue of_pair_set(PairSet s);  // sorts

    Kind kind() const { return static_cast<Kind>(value_.index()); }

    // Throws std::logic_error when the kind does not match.
    std::int64_t as_int() const;
    const IntSet& as_int_set() const;
    const PairSet& as_pair_set() const;

    // Int as decimal; IntSet as "{2,3}"; PairSet as "{(1,2),(1,3)}".
    std::string to_string() const;

    friend bool operator==(const StatValue&, const StatValue&) = default;
    friend auto operator<=>(const StatValue&, const StatValue&) = default;

private:
    explicit StatValue(std::int64_t v) : value_(v) {}
    explicit StatValue(IntSet v) : value_(std::move(v)) {}
    explicit StatValue(PairSet v) : value_(std::move(v)) {}

    std::variant<std::int64_t, IntSet, PairSet> value_;
};

std::string to_string(StatValue::Kind kind);

// Canonical multiset of statistic values: a sorted sequence with duplicates
// retained. Two multisets are equal iff the sorted sequences are equal.
struct ValueMultiset {
    std::vector<StatValue> items;

    ValueMultiset() = default;
    explicit ValueMultiset(std::vector<StatValue> values);  // sorts

    size_t size() const { return items.size(); }

    std::string to_string() const;  // "{{-1,-1,1,1}}"

    friend bool operator==(const ValueMultiset&, const ValueMultiset&) = default;
    friend auto operator<=>(const ValueMultiset&, const ValueMultiset&) = default;
};

}  // namespace shufflecheck
