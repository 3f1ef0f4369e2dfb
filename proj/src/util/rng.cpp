#include "nlpkg/util/rng.hpp"

#include <limits>

namespace nlpkg {

std::uint64_t StableRng::below(std::uint64_t bound) {
    const auto limit = std::numeric_limits<std::uint64_t>::max() -
                       std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % bound;
}

double StableRng::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace nlpkg
