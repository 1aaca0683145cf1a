#include "ffr/parallel.hpp"

#include <cstdlib>

#include "ffr/text.hpp"

namespace ffr {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FFR_THREADS"); env && *env) {
        const auto v = text::parse_u64(env);
        if (v > 0) return static_cast<int>(std::min<std::uint64_t>(v, 1024));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace ffr
