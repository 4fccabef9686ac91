#pragma once

#include <functional>

#include "relspec/grid.hpp"

namespace relspec {

/// Radial Fourier transform, unitary convention (2 pi)^{-N/2} int e^{-i xi x}.
///
/// dim == 3: uhat(rho) = sqrt(2/pi) (1/rho) int_0^R r u(r) sin(rho r) dr,
/// realized as a discrete sine transform of r u(r).
/// dim == 1: even-extension cosine transform (trapezoid-weighted DCT-I over
/// the augmented node set {0, h, ..., R}).
/// Both directions are exact inverses of each other on the grid.
SpectralField forward(const RadialField& field);
RadialField inverse(const SpectralField& spec);

/// inverse(symbol(rho_k) * forward(field)); for dim == 1 the rho = 0 cosine
/// coefficient is scaled by symbol(0).
RadialField apply_multiplier(const RadialField& field, const std::function<double(double)>& symbol);

} // namespace relspec
