#include "sdr/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sdr {

namespace {

void check_pareto(const ParetoSpec& d) {
    if (!(std::isfinite(d.shape) && d.shape > 0.0))
        throw std::invalid_argument("pareto: shape must be positive");
    if (!(std::isfinite(d.scale) && d.scale > 0.0))
        throw std::invalid_argument("pareto: scale must be positive");
}

void check_gamma(const GammaSpec& d) {
    if (!(std::isfinite(d.shape) && d.shape > 0.0))
        throw std::invalid_argument("gamma: shape must be positive");
    if (!(std::isfinite(d.scale) && d.scale > 0.0))
        throw std::invalid_argument("gamma: scale must be positive");
}

}  // namespace

double pareto_pdf(const ParetoSpec& d, double x) {
    check_pareto(d);
    if (x < d.scale) return 0.0;
    return d.shape * std::pow(d.scale, d.shape) / std::pow(x, d.shape + 1.0);
}

double gamma_pdf(const GammaSpec& d, double x) {
    check_gamma(d);
    if (x < 0.0) return 0.0;
    if (x == 0.0) return d.shape < 1.0 ? std::numeric_limits<double>::infinity()
                                       : (d.shape == 1.0 ? 1.0 / d.scale : 0.0);
    return std::pow(x, d.shape - 1.0) * std::exp(-x / d.scale) /
           (std::pow(d.scale, d.shape) * std::tgamma(d.shape));
}

double pdf(const DistributionSpec& d, double x) {
    return std::visit([x](const auto& spec) {
        if constexpr (std::is_same_v<std::decay_t<decltype(spec)>, ParetoSpec>)
            return pareto_pdf(spec, x);
        else
            return gamma_pdf(spec, x);
    }, d);
}

Vec index_weights(const DistributionSpec& d, Index n, bool sorted_ascending) {
    if (n < 1) throw std::invalid_argument("index_weights: need at least one group");
    Vec w(n);
    for (Index i = 0; i < n; ++i) w[i] = pdf(d, static_cast<double>(i + 1));
    const double total = w.sum();
    if (!(total > 0.0) || !std::isfinite(total))
        throw std::invalid_argument("index_weights: density vanishes on the index range");
    w /= total;
    if (sorted_ascending) std::sort(w.begin(), w.end());
    return w;
}

double pareto_quantile(const ParetoSpec& d, double u) {
    check_pareto(d);
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("pareto_quantile: u must lie in (0, 1)");
    return d.scale * std::pow(u, -1.0 / d.shape);
}

std::uint64_t SeededSampler::derive_seed(std::uint64_t parent, std::uint64_t stream) {
    std::uint64_t z = parent + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SeededSampler::next64() { return derive_seed(seed_, counter_++); }

double SeededSampler::next_uniform() {
    while (true) {
        const double u = static_cast<double>(next64() >> 11) * 0x1.0p-53;
        if (u != 0.0) return u;
    }
}

double SeededSampler::next_normal() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double SeededSampler::next_gamma(const GammaSpec& d) {
    check_gamma(d);
    if (d.shape < 1.0) {
        const double g = next_gamma({d.shape + 1.0, d.scale});
        return g * std::pow(next_uniform(), 1.0 / d.shape);
    }
    const double dd = d.shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * dd);
    while (true) {
        double xn = 0.0, v = 0.0;
        do {
            xn = next_normal();
            const double b = 1.0 + c * xn;
            v = b * b * b;
        } while (v <= 0.0);
        const double u = next_uniform();
        if (u < 1.0 - 0.0331 * xn * xn * xn * xn) return dd * v * d.scale;
        if (std::log(u) < 0.5 * xn * xn + dd * (1.0 - v + std::log(v)))
            return dd * v * d.scale;
    }
}

double SeededSampler::next_pareto(const ParetoSpec& d) {
    return pareto_quantile(d, next_uniform());
}

Vec sample(SeededSampler& gen, const ParetoSpec& d, Index count) {
    Vec out(count);
    for (Index i = 0; i < count; ++i) out[i] = gen.next_pareto(d);
    return out;
}

Vec sample(SeededSampler& gen, const GammaSpec& d, Index count) {
    Vec out(count);
    for (Index i = 0; i < count; ++i) out[i] = gen.next_gamma(d);
    return out;
}

Vec sample(SeededSampler& gen, const DistributionSpec& d, Index count) {
    return std::visit([&](const auto& spec) { return sample(gen, spec, count); }, d);
}

}  // namespace sdr
