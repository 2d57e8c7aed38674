#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>

namespace ganirl {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// Counter-based splittable random source. A generator is a (key, counter)
/// pair; draws hash the pair, so streams derived by split() are independent
/// of the order in which other streams are consumed. Every random draw in
/// the library flows from one root seed through named splits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(detail::mix64(seed)), counter_(0) {}

    /// Derive an independent stream identified by (this stream, label).
    [[nodiscard]] Rng split(std::uint64_t label) const {
        Rng child(0);
        child.key_ = detail::mix64(key_ ^ detail::mix64(label ^ 0x5851f42d4c957f2dULL));
        child.counter_ = 0;
        return child;
    }

    [[nodiscard]] Rng split(std::string_view label) const {
        return split(detail::fnv1a(label));
    }

    std::uint64_t next_u64() {
        return detail::mix64(key_ ^ detail::mix64(counter_++));
    }

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n).
    int uniform_int(int n) {
        return static_cast<int>(uniform01() * static_cast<double>(n));
    }

    /// Standard normal via Box-Muller (consumes two draws per value).
    double normal() {
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Draw an index from a probability vector (rows are assumed normalized;
    /// any rounding slack lands on the final index).
    int categorical(std::span<const double> probs) {
        const double u = uniform01();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace ganirl
