#include "relspec/grid.hpp"

#include <cmath>
#include <numbers>

namespace relspec {

namespace {

bool power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

} // namespace

RadialGrid::RadialGrid(int dim, std::size_t points, double radius)
    : dim_(dim), points_(points), radius_(radius) {
    if (dim != 1 && dim != 3)
        throw DimMismatch("radial grid supports dim 1 and 3 only");
    if (!power_of_two(points) || points < 256)
        throw InvalidParams("grid points must be a power of two >= 256");
    if (!(radius > 0.0))
        throw InvalidParams("grid radius must be positive");
    spacing_ = radius_ / static_cast<double>(points_);
    freq_step_ = std::numbers::pi / radius_;
}

bool RadialGrid::same_as(const RadialGrid& other) const {
    return dim_ == other.dim_ && points_ == other.points_ && radius_ == other.radius_;
}

GridPtr make_grid(int dim, std::size_t points, double radius) {
    return std::make_shared<const RadialGrid>(dim, points, radius);
}

void require_same_grid(const RadialField& a, const RadialField& b) {
    if (!a.grid || !b.grid || !a.grid->same_as(*b.grid))
        throw GridMismatch("fields live on different grids");
}

RadialField sample_field(const GridPtr& grid, const std::function<double(double)>& fn) {
    RadialField u(grid);
    for (std::size_t j = 0; j < grid->points(); ++j)
        u.values[j] = fn(grid->node(j));
    u.center = fn(0.0);
    return u;
}

RadialField operator+(const RadialField& a, const RadialField& b) {
    require_same_grid(a, b);
    RadialField out(a.grid);
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] = a.values[j] + b.values[j];
    if (a.center && b.center) out.center = *a.center + *b.center;
    return out;
}

RadialField operator-(const RadialField& a, const RadialField& b) {
    require_same_grid(a, b);
    RadialField out(a.grid);
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] = a.values[j] - b.values[j];
    if (a.center && b.center) out.center = *a.center - *b.center;
    return out;
}

RadialField operator*(double a, const RadialField& u) {
    RadialField out(u.grid);
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] = a * u.values[j];
    if (u.center) out.center = a * *u.center;
    return out;
}

RadialField pointwise_multiply(const RadialField& a, const RadialField& b) {
    require_same_grid(a, b);
    RadialField out(a.grid);
    for (std::size_t j = 0; j < out.values.size(); ++j)
        out.values[j] = a.values[j] * b.values[j];
    if (a.center && b.center) out.center = *a.center * *b.center;
    return out;
}

double center_value(const RadialField& u) {
    if (u.center) return *u.center;
    // even polynomial in r^2 through r = h, ..., 5h, evaluated at 0
    const std::vector<double>& v = u.values;
    return (5.0 / 3.0) * v[0] - (20.0 / 21.0) * v[1] + (5.0 / 14.0) * v[2] - (5.0 / 63.0) * v[3] +
           (1.0 / 126.0) * v[4];
}

} // namespace relspec
