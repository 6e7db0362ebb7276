#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace vibspec {

/// splitmix64 step, used to expand seeds into generator state.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Mixes (master seed, sample index, role) into a single stream key.
/// Every (index, role) combination gets its own statistically independent
/// generator, so ensemble results do not depend on how samples are
/// scheduled across workers.
inline std::uint64_t stream_key(std::uint64_t master, std::uint64_t index,
                                std::uint64_t role) {
    std::uint64_t s = master;
    s = splitmix64_next(s) ^ (index * 0xd1342543de82ef95ull);
    s = splitmix64_next(s) ^ (role * 0xaf251af3b0f025b5ull);
    return splitmix64_next(s);
}

namespace stream_role {
inline constexpr std::uint64_t generic = 0;
inline constexpr std::uint64_t stiffness_factor = 1;  ///< Ginibre factor of K
inline constexpr std::uint64_t mass_factor = 2;       ///< Ginibre factor of M
inline constexpr std::uint64_t disorder = 3;          ///< pendulum parameter draws
}  // namespace stream_role

/// xoshiro256++ generator bound to one (seed, index, role) stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) {
        std::uint64_t s = key;
        for (auto& word : state_) word = splitmix64_next(s);
    }

    RngStream(std::uint64_t master, std::uint64_t index, std::uint64_t role)
        : RngStream(stream_key(master, index, role)) {}

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller; values come in deterministic pairs.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

    /// Independent standard normal real and imaginary parts.
    std::complex<double> normal_complex() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace vibspec
