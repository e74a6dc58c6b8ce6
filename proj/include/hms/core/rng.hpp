#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace hms {

/// Seeded generator whose outputs are identical on every platform:
/// mt19937_64 is fully specified, and bounded draws and shuffles are done
/// here rather than through the implementation-defined std distributions.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound > 0, by rejection sampling.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % bound;
    }

    template <typename T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hms
