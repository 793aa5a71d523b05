#pragma once

#include "sdr/types.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace sdr::test {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline Scenario make_scenario(std::vector<double> weights, std::vector<double> rates,
                              double theta, double sigma, double w = 1.0,
                              double t = 1.0) {
    std::vector<Group> gs;
    for (std::size_t i = 0; i < weights.size(); ++i)
        gs.push_back({weights[i], rates[i]});
    return Scenario(gs, theta, sigma, w, t);
}

// Benchmark case used throughout: three groups, theta 0.2, sigma 2, t 1.
inline Scenario benchmark_scenario() {
    return make_scenario({0.5, 0.3, 0.2}, {0.01, 0.02, 0.03}, 0.2, 2.0, 1.0, 1.0);
}

// Deterministic random scenarios for property checks.
class ScenarioGen {
  public:
    explicit ScenarioGen(std::uint64_t seed) : rng_(seed) {}

    Scenario next(int min_n = 1, int max_n = 8) {
        std::uniform_int_distribution<int> nd(min_n, max_n);
        const int n = nd(rng_);
        std::vector<Group> gs;
        for (int i = 0; i < n; ++i)
            gs.push_back({uniform(0.05, 5.0), uniform(0.0, 0.1)});
        return Scenario(gs, uniform(0.0, 0.99), uniform(0.25, 4.0), uniform(0.5, 10.0),
                        uniform(0.0, 100.0));
    }

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(rng_);
    }

    int pick(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng_);
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace sdr::test
