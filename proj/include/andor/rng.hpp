#ifndef ANDOR_RNG_HPP
#define ANDOR_RNG_HPP

#include <cstdint>

namespace andor {

/// SplitMix64 finaliser; used for seeding and for stateless hashing.
inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// xorshift64* generator. Streams are fully specified here (no std::
/// distributions), so a seed reproduces the same instance everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(splitmix64(seed))
    {
        if (state_ == 0) state_ = 0x2545F4914F6CDD1DULL;
    }

    std::uint64_t next() noexcept
    {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) noexcept { return unit() < p; }

private:
    std::uint64_t state_;
};

} // namespace andor

#endif // ANDOR_RNG_HPP
