#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "relspec/errors.hpp"

namespace relspec {

/// Uniform radial grid on (0, R] with Dirichlet truncation at R.
/// Nodes r_j = j h (j = 1..K, h = R/K), frequencies rho_k = k pi / R.
class RadialGrid {
public:
    RadialGrid(int dim, std::size_t points, double radius);

    int dim() const { return dim_; }
    std::size_t points() const { return points_; }
    double radius() const { return radius_; }
    double spacing() const { return spacing_; }

    double node(std::size_t j) const { return static_cast<double>(j + 1) * spacing_; }        // j = 0..K-1
    double frequency(std::size_t k) const { return static_cast<double>(k + 1) * freq_step_; } // k = 0..K-1
    double frequency_step() const { return freq_step_; }

    bool same_as(const RadialGrid& other) const;

private:
    int dim_;
    std::size_t points_;
    double radius_;
    double spacing_;
    double freq_step_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

GridPtr make_grid(int dim, std::size_t points, double radius);

/// Physical samples u(r_j), j = 1..K.  For dim == 1 the value at the origin
/// is carried alongside when it is known exactly (sampling, transforms,
/// pointwise arithmetic); operator algebra on the cosine basis is exact only
/// with that coordinate present.  Absent, it is recovered by even
/// extrapolation.
struct RadialField {
    GridPtr grid;
    std::vector<double> values;
    std::optional<double> center;

    RadialField() = default;
    explicit RadialField(GridPtr g) : grid(std::move(g)), values(grid->points(), 0.0) {}
};

/// Transform coefficients uhat(rho_k), k = 1..K.  For dim == 1 the cosine
/// expansion additionally carries the rho = 0 coefficient; it is transform
/// bookkeeping, not a grid mode.
struct SpectralField {
    GridPtr grid;
    std::vector<double> coeffs;
    double zero_mode = 0.0;

    SpectralField() = default;
    explicit SpectralField(GridPtr g) : grid(std::move(g)), coeffs(grid->points(), 0.0) {}
};

void require_same_grid(const RadialField& a, const RadialField& b);

RadialField sample_field(const GridPtr& grid, const std::function<double(double)>& fn);

// elementwise helpers; operands must share a grid
RadialField operator+(const RadialField& a, const RadialField& b);
RadialField operator-(const RadialField& a, const RadialField& b);
RadialField operator*(double a, const RadialField& u);
RadialField pointwise_multiply(const RadialField& a, const RadialField& b);

/// u(0): the stored center when present, otherwise recovered from the first
/// five interior samples by even-symmetric polynomial extrapolation.
double center_value(const RadialField& u);

} // namespace relspec
