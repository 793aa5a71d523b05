#pragma once

#include "sdr/types.hpp"

#include <functional>

namespace sdr {

// Capital growth primitive F(S) = S^gamma - delta S around a stock level.
struct GrowthModel {
    double exponent = 0.5;      // gamma in (0, 1)
    double depreciation = 0.0;  // delta >= 0
    double stock = 1.0;         // S > 0

    friend bool operator==(const GrowthModel&, const GrowthModel&) = default;
};

enum class ShareMode { literal, crra };
enum class PolicyMode { display, tolerance };

// One row of the three-rate comparison: the lobbying planner's blended rate,
// the welfare-equivalent rate, and the policy-equivalent rate, plus the
// lobby-vs-welfare disagreement proxy.
struct RateComparison {
    double t = 0.0;
    double rho_lobby = 0.0;
    double rho_welfare = 0.0;
    double rho_policy = 0.0;
    double delta_disagreement = 0.0;
};

// Efficient consumption profile at time t, scaled so the entries sum to
// `total`. literal mode weighs groups by y_i e^(-rho_i t) (the exogenous
// income-stream special case); crra mode uses the first-order weights
// (y_i e^(-rho_i t))^(1/eta) that solve the eta-curvature planner problem.
// Large tilts are handled in log space.
Vec efficient_shares(const Eigen::Ref<const Vec>& weights,
                     const Eigen::Ref<const Vec>& rates, double eta, double t,
                     double total, ShareMode mode = ShareMode::literal);

// Welfare-equivalent rate: the exponentially tilted mean
// sum rho_i y_i e^(-rho_i t) / sum y_i e^(-rho_i t), computed with the
// minimum rate factored out so huge horizons stay finite.
double rho_welfare(const Eigen::Ref<const Vec>& weights,
                   const Eigen::Ref<const Vec>& rates, double t);

double growth_f(const GrowthModel& model);
double growth_f_prime(const GrowthModel& model);

// Concentration index sum x_i^2 / (sum x_i)^2 in [1/n, 1].
double j_ratio(const Eigen::Ref<const Vec>& consumption);

// Policy-equivalent rate (1 - J) F'(S) + J rho^V on the crra-efficient
// consumption profile with aggregate consumption `aggregate`. display mode
// evaluates rho^V with squared-share weights, tolerance mode with plain
// shares; the two disagree in general and both are kept on purpose.
double rho_policy(const Eigen::Ref<const Vec>& weights,
                  const Eigen::Ref<const Vec>& rates, double eta,
                  const GrowthModel& model, double t,
                  PolicyMode mode = PolicyMode::tolerance, double aggregate = 1.0);

// Evaluates all three rates for the scenario's groups at time t.
// rho_lobby uses the scenario's theta through the closed-form allocation.
RateComparison compare_rates(const Scenario& s, double eta, const GrowthModel& model,
                             double t, PolicyMode mode = PolicyMode::tolerance,
                             double aggregate = 1.0);

// Fixed-step classical fourth-order integration of
// dS/dt = F(S) - consumption(t) from the model's stock at t = 0.
// Throws if the stock is exhausted along the way.
double integrate_stock(const GrowthModel& model,
                       const std::function<double(double)>& consumption,
                       double t_end, double step = 0.01);

}  // namespace sdr
