#pragma once

#include "relspec/grid.hpp"

namespace relspec {

/// Positive radial decaying solution of the limit equation (-Delta + 1) u = u^p
/// with a spectral residual certificate.
struct GroundState {
    enum class Method { closed_form, petviashvili };

    RadialField field;
    double p = 0.0;
    double residual = 0.0;       // ||(-Delta+1)u - u^p||_2 / ||u||_2
    double normalization = 1.0;  // Petviashvili factor M at the final iterate
    Method method = Method::closed_form;
};

/// sign(x) |x|^p
double signed_power(double x, double p);

/// Relative residual of the limit equation for a candidate field.
double limit_equation_residual(const RadialField& u, double p);

/// dim 1 soliton ((p+1)/2)^{1/(p-1)} sech^{2/(p-1)}((p-1) x / 2).
GroundState closed_form_1d(double p, const GridPtr& grid);

/// Normalized fixed-point iteration v <- M^gamma (-Delta+1)^{-1} v^p with
/// M = <(-Delta+1) v, v> / <v^p, v> and gamma = p/(p-1), seeded with a unit
/// Gaussian.  Stops when the successive-iterate L2 change drops below tol.
GroundState petviashvili(double p, const GridPtr& grid, double tol = 1e-13, int max_iter = 500);

} // namespace relspec
