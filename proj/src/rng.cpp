#include "relspec/rng.hpp"

#include "relspec/transform.hpp"

namespace relspec {

RadialField random_band_limited(const GridPtr& grid, DetRng& rng) {
    SpectralField spec(grid);
    const std::size_t band = grid->points() / 8;
    for (std::size_t k = 0; k < band; ++k)
        spec.coeffs[k] = rng.uniform_pm1();
    return inverse(spec);
}

} // namespace relspec
