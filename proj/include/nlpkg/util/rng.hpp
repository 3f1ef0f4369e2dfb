#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace nlpkg {

/// Seeded generator whose draws are identical on every standard library.
/// std::mt19937_64's output sequence is fixed by the standard; the
/// distributions in <random> are not, so bounded draws are done here.
class StableRng {
public:
    explicit StableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound) by rejection; bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [0, 1).
    double unit();

    // In-place Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace nlpkg
