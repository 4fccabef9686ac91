#include "relspec/norms.hpp"

#include <cmath>
#include <numbers>

namespace relspec {

namespace {

double weight(const RadialGrid& g, double r) {
    return g.dim() == 1 ? 2.0 : 4.0 * std::numbers::pi * r * r;
}

} // namespace

double integrate_radial(const GridPtr& grid, double f0, const std::vector<double>& f) {
    const RadialGrid& g = *grid;
    const std::size_t K = g.points();
    const double h = g.spacing();
    // composite Simpson over j = 0..K (K even)
    double odd = 0.0, even = 0.0;
    for (std::size_t j = 0; j + 1 < K; j += 2)
        odd += weight(g, g.node(j)) * f[j];            // nodes 1, 3, ...
    for (std::size_t j = 1; j + 1 < K; j += 2)
        even += weight(g, g.node(j)) * f[j];           // nodes 2, 4, ...
    const double end = weight(g, g.radius()) * f[K - 1];
    const double start = weight(g, 0.0) * f0;
    return h / 3.0 * (start + 4.0 * odd + 2.0 * even + end);
}

std::vector<double> radial_derivative(const RadialField& u) {
    const RadialGrid& g = *u.grid;
    const std::size_t K = g.points();
    const double inv12h = 1.0 / (12.0 * g.spacing());
    const std::vector<double>& v = u.values;
    const double v0 = center_value(u);
    std::vector<double> d(K);

    // logical sample j corresponds to v[j-1]; v_{-j} = v_j by evenness
    d[0] = (-v[2] + 8.0 * v[1] - 8.0 * v0 + v[0]) * inv12h;
    d[1] = (-v[3] + 8.0 * v[2] - 8.0 * v[0] + v0) * inv12h;
    for (std::size_t j = 2; j + 2 < K; ++j)
        d[j] = (-v[j + 2] + 8.0 * v[j + 1] - 8.0 * v[j - 1] + v[j - 2]) * inv12h;
    for (std::size_t j = K - 2; j < K; ++j)
        d[j] = (25.0 * v[j] - 48.0 * v[j - 1] + 36.0 * v[j - 2] - 16.0 * v[j - 3] + 3.0 * v[j - 4]) * inv12h;
    return d;
}

std::vector<double> radial_second_derivative(const RadialField& u) {
    const RadialGrid& g = *u.grid;
    const std::size_t K = g.points();
    const double inv12h2 = 1.0 / (12.0 * g.spacing() * g.spacing());
    const std::vector<double>& v = u.values;
    const double v0 = center_value(u);
    std::vector<double> d(K);

    d[0] = (-v[2] + 16.0 * v[1] - 30.0 * v[0] + 16.0 * v0 - v[0]) * inv12h2;
    d[1] = (-v[3] + 16.0 * v[2] - 30.0 * v[1] + 16.0 * v[0] - v0) * inv12h2;
    for (std::size_t j = 2; j + 2 < K; ++j)
        d[j] = (-v[j + 2] + 16.0 * v[j + 1] - 30.0 * v[j] + 16.0 * v[j - 1] - v[j - 2]) * inv12h2;
    for (std::size_t j = K - 2; j < K; ++j)
        d[j] = (45.0 * v[j] - 154.0 * v[j - 1] + 214.0 * v[j - 2] - 156.0 * v[j - 3] + 61.0 * v[j - 4] -
                10.0 * v[j - 5]) * inv12h2;
    return d;
}

namespace {

double lp_norm(const GridPtr& grid, double f0, const std::vector<double>& f, double q) {
    std::vector<double> absq(f.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        absq[j] = std::pow(std::abs(f[j]), q);
    return std::pow(integrate_radial(grid, std::pow(std::abs(f0), q), absq), 1.0 / q);
}

} // namespace

NormSet norms(const RadialField& u, double q) {
    if (q < 2.0)
        throw QMismatch("Lebesgue index q must be >= 2");
    NormSet n;
    n.q = q;
    const double u0 = center_value(u);
    const std::vector<double> du = radial_derivative(u);
    n.l2 = lp_norm(u.grid, u0, u.values, 2.0);
    n.lq = lp_norm(u.grid, u0, u.values, q);
    const double dl2 = lp_norm(u.grid, 0.0, du, 2.0);  // u'(0) = 0 by evenness
    const double dlq = lp_norm(u.grid, 0.0, du, q);
    n.h1 = std::sqrt(n.l2 * n.l2 + dl2 * dl2);
    n.w1q = n.lq + dlq;
    n.intersection = std::max(n.h1, n.w1q);
    return n;
}

double norm_l2(const RadialField& u) {
    return lp_norm(u.grid, center_value(u), u.values, 2.0);
}

double norm_lq(const RadialField& u, double q) {
    return lp_norm(u.grid, center_value(u), u.values, q);
}

double inner_l2(const RadialField& a, const RadialField& b) {
    require_same_grid(a, b);
    const RadialGrid& g = *a.grid;
    const std::size_t K = g.points();
    double sum = 0.0;
    if (g.dim() == 3) {
        for (std::size_t j = 0; j < K; ++j) {
            const double r = g.node(j);
            sum += r * r * a.values[j] * b.values[j];
        }
        return 4.0 * std::numbers::pi * g.spacing() * sum;
    }
    // trapezoid over {0, ..., R}: interior full weight, ends halved
    const double a0 = center_value(a), b0 = center_value(b);
    for (std::size_t j = 0; j + 1 < K; ++j)
        sum += a.values[j] * b.values[j];
    sum += 0.5 * (a0 * b0 + a.values[K - 1] * b.values[K - 1]);
    return 2.0 * g.spacing() * sum;
}

double spectral_norm_l2(const SpectralField& spec) {
    const RadialGrid& g = *spec.grid;
    const std::size_t K = g.points();
    double sum = 0.0;
    if (g.dim() == 3) {
        for (std::size_t k = 0; k < K; ++k) {
            const double rho = g.frequency(k);
            sum += rho * rho * spec.coeffs[k] * spec.coeffs[k];
        }
        return std::sqrt(4.0 * std::numbers::pi * g.frequency_step() * sum);
    }
    for (std::size_t k = 0; k + 1 < K; ++k)
        sum += spec.coeffs[k] * spec.coeffs[k];
    sum += 0.5 * (spec.zero_mode * spec.zero_mode + spec.coeffs[K - 1] * spec.coeffs[K - 1]);
    return std::sqrt(2.0 * g.frequency_step() * sum);
}

} // namespace relspec
