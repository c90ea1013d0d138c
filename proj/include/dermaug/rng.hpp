#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace dermaug {

// Generator "splitmix64-v1".
//
// Every random decision in the toolkit is drawn from a counter-based stream
// whose seed is a 64-bit hash of (master_seed, sample_id, op_name):
//
//     stream_seed = mix64(mix64(master_seed ^ fnv1a64(sample_id)) ^ fnv1a64(op_name))
//
// and the i-th raw value of a stream (1-based counter) is
//
//     mix64(stream_seed + i * 0x9E3779B97F4A7C15)
//
// where mix64 is the splitmix64 finalizer and fnv1a64 the 64-bit FNV-1a hash
// of the UTF-8 bytes. Identical (master_seed, sample_id, op_name) therefore
// replay the same stream regardless of evaluation order or thread count.
// Integer draws are bit-exact across platforms; draws that go through libm
// (normal, uniform doubles) are bit-exact across runs on the same platform.

inline constexpr std::string_view kRngVersion = "splitmix64-v1";

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t stream_seed) : seed_(stream_seed) {}

    std::uint64_t next_u64() { return mix64(seed_ + (++counter_) * kGolden); }

    /// Uniform in [0, 1), 53 mantissa bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, n), n >= 1. Rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t x, r;
        do {
            x = next_u64();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);
        return r;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Box-Muller (cosine branch); consumes exactly two raw values per call.
    double normal(double mean, double stddev) {
        const double u1 = 1.0 - next_double(); // (0, 1], keeps log() finite
        const double u2 = next_double();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        return mean + stddev * z;
    }

    std::uint64_t stream_seed() const { return seed_; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
};

/// Identifies one sample's source of randomness within a run.
struct SeedContext {
    std::uint64_t master_seed = 0;
    std::string sample_id;

    std::uint64_t stream_seed(std::string_view op_name) const {
        return mix64(mix64(master_seed ^ fnv1a64(sample_id)) ^ fnv1a64(op_name));
    }

    RandomStream stream(std::string_view op_name) const {
        return RandomStream(stream_seed(op_name));
    }
};

/// Deterministic Fisher-Yates shuffle driven by a RandomStream.
template <typename T>
void shuffle(std::vector<T>& v, RandomStream& rs) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rs.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace dermaug
