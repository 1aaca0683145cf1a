#pragma once

#include <cstdint>

namespace ffr {

// Hard limits on enumeration work. Requests beyond them are refused with
// BudgetExceeded; nothing is silently truncated.
struct Budget {
    std::uint64_t enumeration = std::uint64_t{1} << 24;
    std::uint64_t oracle = 10'000'000;
};

struct RunOptions {
    Budget budget;
    int threads = 1;
};

}  // namespace ffr
