#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace pst::detail {

// Uniform integer in [0, bound) by rejection sampling. std::mt19937_64 has a
// standard-specified output sequence; the standard distributions do not, so
// graph generation rolls its own draws to stay bit-identical across
// platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // 2^64 mod bound; values below it would bias the low residues.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

// Uniform double in [lo, hi) built from the top 53 bits of one draw.
inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

// Index of the weight interval containing `ticket`, for ticket in
// [0, sum(weights)). Zero weights are never picked.
inline std::size_t pick_weighted(std::span<const std::uint64_t> weights, std::uint64_t ticket) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (ticket < weights[i]) return i;
        ticket -= weights[i];
    }
    // unreachable for a valid ticket
    return weights.size() - 1;
}

}  // namespace pst::detail
