#pragma once

#include <cstdint>
#include <random>

#include "relspec/grid.hpp"

namespace relspec {

/// Deterministic RNG with an explicit bit-to-double mapping, so manifests
/// reproduce bit-for-bit across standard libraries.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : gen_(seed) {}

    /// uniform in [-1, 1)
    double uniform_pm1() {
        return 2.0 * (static_cast<double>(gen_() >> 11) * 0x1.0p-53) - 1.0;
    }

    /// uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 gen_;
};

/// Band-limited probe field: coefficients uniform in [-1, 1] on the lowest
/// K/8 modes, zero elsewhere.
RadialField random_band_limited(const GridPtr& grid, DetRng& rng);

} // namespace relspec
