#pragma once

#include "relspec/grid.hpp"
#include "relspec/symbol.hpp"

namespace relspec {

/// Virial functional (N-2s) int u f(u) - 2N int F(u) + 2 a^2 s int u (a^2 - b^2 Delta)^{s-1} u
/// with f(t) = |t|^{p-1} t - kappa t; vanishes on solutions of the equation.
double pohozaev_functional(const RadialField& u, double p, const SymbolParams& params);

enum class ExistenceRegime { nonexistence, open, large_c };

const char* to_string(ExistenceRegime regime);

/// nonexistence: kappa >= 0 together with the sign obstruction
/// 1/(p+1) - (N-2s)/(2N) <= 0 (equivalently p >= (N+2s)/(N-2s) when N > 2s);
/// large_c: p below the Sobolev critical exponent (N+2)/(N-2), any p > 1 for
/// N < 3; open otherwise.
ExistenceRegime classify_existence(double p, const SymbolParams& params, int dim);

/// Relative L2 defect of the dilation-commutator identity
/// (a^2-b^2 Delta)^s (r phi') - r ((a^2-b^2 Delta)^s phi)'
///   = 2s (a^2-b^2 Delta)^s phi - 2 a^2 s (a^2-b^2 Delta)^{s-1} phi,
/// evaluated with the grid transform and 4th-order radial derivatives.
/// s = 1 reduces it to the classical commutator with the Laplacian.
double commutator_defect(const RadialField& phi, double s, double a2, double b2);
double commutator_defect(const RadialField& phi, const SymbolParams& params);

/// Change of variables u(x) = amplitude * v(dilation * x) linking the general
/// (m, mu) equation at speed c to the normalized one at speed_factor * c.
struct ScalingMap {
    double amplitude = 1.0;
    double dilation = 1.0;
    double speed_factor = 1.0;

    /// amplitude = mu^{1/(1-p)}, dilation = sqrt(s / (mu m^{2(1-s)})),
    /// speed_factor = sqrt(s) mu^{(1-s)/(2s)} / m^{1-s}.  At the normalized
    /// parameters every exponent cancels and the map is the identity; that
    /// branch is taken symbolically, not through pow.
    static ScalingMap for_parameters(double s, double m, double mu, double p);
    static ScalingMap for_parameters(const SymbolParams& params, double p);

    double map_speed(double c) const { return speed_factor * c; }
    bool is_identity() const { return amplitude == 1.0 && dilation == 1.0 && speed_factor == 1.0; }
};

/// Resample through the scaling map with cubic interpolation.  Forward reads
/// v at dilation * r and multiplies by amplitude; inverse undoes it.  Throws
/// SupportOverflow when the dilated argument leaves the source grid.
RadialField scale_field(const RadialField& v, const ScalingMap& map, bool forward_direction,
                        const GridPtr& target);

/// Cubic Lagrange interpolation of a radial field at an arbitrary radius,
/// using the even extension across the origin.
double interpolate(const RadialField& u, double r);

} // namespace relspec
