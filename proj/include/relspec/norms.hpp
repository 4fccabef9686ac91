#pragma once

#include <vector>

#include "relspec/grid.hpp"

namespace relspec {

struct NormSet {
    double q = 0.0;
    double l2 = 0.0;
    double lq = 0.0;
    double h1 = 0.0;
    double w1q = 0.0;          // ||u||_q + ||u'||_q
    double intersection = 0.0; // max(h1, w1q)
};

/// All norms use the radial measure (2 dr for dim 1 by evenness, 4 pi r^2 dr
/// for dim 3) with composite Simpson quadrature over {0, h, ..., R}; the
/// gradient is the 4th-order finite-difference radial derivative.
NormSet norms(const RadialField& u, double q);

double norm_l2(const RadialField& u);
double norm_lq(const RadialField& u, double q);

/// Radial-measure L2 inner product (trapezoid weights; the exact discrete
/// Plancherel mate of the transform pair).
double inner_l2(const RadialField& a, const RadialField& b);

/// L2 norm of a spectral field under the dual radial measure.
double spectral_norm_l2(const SpectralField& spec);

/// 4th-order radial derivative; even reflection across the origin, one-sided
/// stencils at the truncation end.
std::vector<double> radial_derivative(const RadialField& u);
std::vector<double> radial_second_derivative(const RadialField& u);

/// Simpson integral of W(r) f(r) over [0, R], W the radial weight; f0 is the
/// integrand value at r = 0.
double integrate_radial(const GridPtr& grid, double f0, const std::vector<double>& f);

} // namespace relspec
