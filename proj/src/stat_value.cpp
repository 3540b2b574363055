#include "shufflecheck/stat_value.hpp"

#include <algorithm>
#include <stdexcept>

namespace shufflecheck {

StatValue StatValue::of_int_set(IntSet s) {
    std::sort(s.begin(), s.end());
    return StatValue(std::move(s));
}

StatValue StatValue::of_pair_set(PairSet s) {
    std::sort(s.begin(), s.end());
    return StatValue(std::move(s));
}

std::int64_t StatValue::as_int() const {
    if (auto* v = std::get_if<std::int64_t>(&value_)) {
        return *v;
    }
    throw std::logic_error("StatValue is not an integer");
}

const StatValue::IntSet& StatValue::as_int_set() const {
    if (auto* v = std::get_if<IntSet>(&value_)) {
        return *v;
    }
    throw std::logic_error("StatValue is not an integer set");
}

const StatValue::PairSet& StatValue::as_pair_set() const {
    if (auto* v = std::get_if<PairSet>(&value_)) {
        return *v;
    }
    throw std::logic_error("StatValue is not a pair set");
}

std::string StatValue::to_string() const {
    switch (kind()) {
        case Kind::integer:
            return std::to_string(std::get<std::int64_t>(value_));
        case Kind::int_set: {
            const auto& s = std::get<IntSet>(value_);
            std::string out = "{";
            for (size_t i = 0; i < s.size(); ++i) {
                if (i > 0) {
                    out.push_back(',');
                }
                out += std::to_string(s[i]);
            }
            out.push_back('}');
            return out;
        }
        case Kind::pair_set: {
            const auto& s = std::get<PairSet>(value_);
            std::string out = "{";
            for (size_t i = 0; i < s.size(); ++i) {
                if (i > 0) {
                    out.push_back(',');
                }
                out += "(" + std::to_string(s[i].first) + "," + std::to_string(s[i].second) + ")";
            }
            out.push_back('}');
            return out;
        }
    }
    return {};
}

std::string to_string(StatValue::Kind kind) {
    switch (kind) {
        case StatValue::Kind::integer:
            return "int";
        case StatValue::Kind::int_set:
            return "int-set";
        case StatValue::Kind::pair_set:
            return "pair-set";
    }
    return {};
}

ValueMultiset::ValueMultiset(std::vector<StatValue> values) : items(std::move(values)) {
    std::sort(items.begin(), items.end());
}

std::string ValueMultiset::to_string() const {
    std::string out = "{{";
    for (size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += items[i].to_string();
    }
    out += "}}";
    return out;
}

}  // namespace shufflecheck
