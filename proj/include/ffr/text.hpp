#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ffr::text {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::uint64_t parse_u64(std::string_view s);
std::int64_t parse_i64(std::string_view s);
double parse_double(std::string_view s);
bool parse_bool(std::string_view s);

template <class Range, class Fn>
std::string join(const Range& items, std::string_view sep, Fn&& fn) {
    std::string out;
    bool first = true;
    for (const auto& it : items) {
        if (!first) out += sep;
        first = false;
        out += fn(it);
    }
    return out;
}

// Fixed six-decimal rendering used for ratios in reports.
std::string fixed6(double v);

}  // namespace ffr::text
