#ifndef CORESCOPE_RNG_HPP
#define CORESCOPE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace corescope {

/// mt19937_64 with hand-rolled bounded/real draws. The engine's output
/// sequence is pinned by the standard, and avoiding std distributions
/// keeps generated topologies identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1], safe as an inverse-CDF argument.
    double real01_open_low() { return 1.0 - real01(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace corescope

#endif
