#pragma once

#include "sdr/types.hpp"

#include <cstdint>
#include <variant>

namespace sdr {

// Pareto(shape alpha, scale k): density alpha k^alpha x^-(alpha+1) on x >= k.
struct ParetoSpec {
    double shape = 1.0;
    double scale = 1.0;

    friend bool operator==(const ParetoSpec&, const ParetoSpec&) = default;
};

// Gamma(shape alpha, scale beta): density x^(alpha-1) e^(-x/beta) / (beta^alpha Gamma(alpha)).
struct GammaSpec {
    double shape = 1.0;
    double scale = 1.0;

    friend bool operator==(const GammaSpec&, const GammaSpec&) = default;
};

using DistributionSpec = std::variant<ParetoSpec, GammaSpec>;

double pareto_pdf(const ParetoSpec& d, double x);
double gamma_pdf(const GammaSpec& d, double x);
double pdf(const DistributionSpec& d, double x);

// Wealth profile over group indices: evaluate the density at i = 1..n and
// normalize to sum one. Optionally sorted ascending so the favored group
// (index 0) holds the least wealth.
Vec index_weights(const DistributionSpec& d, Index n, bool sorted_ascending = false);

// Inverse survival sampling transform k * u^(-1/alpha) for u in (0, 1).
double pareto_quantile(const ParetoSpec& d, double u);

// Counter-based splitmix64 stream. The value at counter position k is a pure
// function of (seed, k):
//   z = seed + (k + 1) * 0x9E3779B97F4A7C15           (mod 2^64)
//   z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9            (mod 2^64)
//   z = (z ^ z >> 27) * 0x94D049BB133111EB            (mod 2^64)
//   z = z ^ z >> 31
// so sequences are reproducible across platforms. Uniforms take the top 53
// bits and redraw on an exact zero; normals use Box-Muller (two uniforms,
// sine branch discarded); Gamma uses Marsaglia-Tsang squeeze for shape >= 1
// and the power boost G(a) = G(a+1) U^(1/a) below one.
class SeededSampler {
  public:
    explicit SeededSampler(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next64();
    double next_uniform();
    double next_normal();
    double next_gamma(const GammaSpec& d);
    double next_pareto(const ParetoSpec& d);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    // Child stream for replication `stream`: the parent's raw output at
    // counter position `stream`. Parents used for spawning should not also
    // draw variates.
    static std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream);

  private:
    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
};

Vec sample(SeededSampler& gen, const ParetoSpec& d, Index count);
Vec sample(SeededSampler& gen, const GammaSpec& d, Index count);
Vec sample(SeededSampler& gen, const DistributionSpec& d, Index count);

}  // namespace sdr
