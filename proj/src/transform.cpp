#include "relspec/transform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include <fftw3.h>

namespace relspec {

namespace {

// FFTW plans are cached per (kind, length); creation is serialized, execution
// through the new-array interface is thread-safe.  Plans are created with
// FFTW_UNALIGNED so they can run on plain vector storage.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(fftw_r2r_kind kind, std::vector<double>& in, std::vector<double>& out) {
        const fftw_plan plan = get(kind, in.size());
        fftw_execute_r2r(plan, in.data(), out.data());
    }

private:
    fftw_plan get(fftw_r2r_kind kind, std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto key = std::make_pair(static_cast<int>(kind), n);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<double> a(n), b(n);
        fftw_plan plan = fftw_plan_r2r_1d(static_cast<int>(n), a.data(), b.data(), kind,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

    std::mutex mutex_;
    std::map<std::pair<int, std::size_t>, fftw_plan> plans_;
};

constexpr double kSqrt2OverPi = 0.79788456080286535588;  // sqrt(2/pi)

} // namespace

SpectralField forward(const RadialField& field) {
    const RadialGrid& g = *field.grid;
    const std::size_t K = g.points();
    SpectralField spec(field.grid);

    if (g.dim() == 3) {
        // sine transform of r u(r); the node r_K = R carries sin(pi k) = 0
        std::vector<double> in(K - 1), out(K - 1);
        for (std::size_t j = 0; j + 1 < K; ++j)
            in[j] = g.node(j) * field.values[j];
        PlanCache::instance().execute(FFTW_RODFT00, in, out);
        const double scale = kSqrt2OverPi * g.spacing() * 0.5;  // FFTW RODFT00 = 2 * sine sum
        for (std::size_t k = 0; k + 1 < K; ++k)
            spec.coeffs[k] = scale * out[k] / g.frequency(k);
        spec.coeffs[K - 1] = 0.0;
        spec.zero_mode = 0.0;
        return spec;
    }

    // dim == 1: DCT-I over {u(0), u(h), ..., u(R)}
    std::vector<double> in(K + 1), out(K + 1);
    in[0] = center_value(field);
    for (std::size_t j = 0; j < K; ++j)
        in[j + 1] = field.values[j];
    PlanCache::instance().execute(FFTW_REDFT00, in, out);
    const double scale = kSqrt2OverPi * g.spacing() * 0.5;  // FFTW REDFT00 = 2 * trapezoid sum
    spec.zero_mode = scale * out[0];
    for (std::size_t k = 0; k < K; ++k)
        spec.coeffs[k] = scale * out[k + 1];
    return spec;
}

RadialField inverse(const SpectralField& spec) {
    const RadialGrid& g = *spec.grid;
    const std::size_t K = g.points();
    RadialField field(spec.grid);
    const double freq_step = g.frequency_step();

    if (g.dim() == 3) {
        std::vector<double> in(K - 1), out(K - 1);
        for (std::size_t k = 0; k + 1 < K; ++k)
            in[k] = g.frequency(k) * spec.coeffs[k];
        PlanCache::instance().execute(FFTW_RODFT00, in, out);
        const double scale = kSqrt2OverPi * freq_step * 0.5;
        for (std::size_t j = 0; j + 1 < K; ++j)
            field.values[j] = scale * out[j] / g.node(j);
        field.values[K - 1] = 0.0;
        return field;
    }

    std::vector<double> in(K + 1), out(K + 1);
    in[0] = spec.zero_mode;
    for (std::size_t k = 0; k < K; ++k)
        in[k + 1] = spec.coeffs[k];
    PlanCache::instance().execute(FFTW_REDFT00, in, out);
    const double scale = kSqrt2OverPi * freq_step * 0.5;
    field.center = scale * out[0];
    for (std::size_t j = 0; j < K; ++j)
        field.values[j] = scale * out[j + 1];
    return field;
}

RadialField apply_multiplier(const RadialField& field, const std::function<double(double)>& symbol) {
    SpectralField spec = forward(field);
    const std::size_t K = spec.coeffs.size();
    for (std::size_t k = 0; k < K; ++k)
        spec.coeffs[k] *= symbol(spec.grid->frequency(k));
    if (spec.grid->dim() == 1)
        spec.zero_mode *= symbol(0.0);
    return inverse(spec);
}

} // namespace relspec
