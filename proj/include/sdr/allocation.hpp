#pragma once

#include "sdr/types.hpp"

namespace sdr {

// CRRA felicity x^(1-sigma)/(1-sigma), with the log limit at sigma = 1.
// Throws std::domain_error for x <= 0.
double felicity(double x, double sigma);

// Discounted utility u(x) * exp(-rho * t).
double discounted_utility(double x, double rho, double t, double sigma);

// Same, extended to x = 0 by the limit value (0 when sigma < 1, -infinity
// otherwise). Lets validity checks rank allocations with starved groups.
double discounted_utility_limit(double x, double rho, double t, double sigma);

// Planner objective: (1-theta) * sum_i y_i U_i(x_i) + theta * min_i U_i(x_i).
// consumption must be strictly positive and of matching length.
double welfare(const Scenario& s, const Eigen::Ref<const Vec>& consumption);

// Relative-advantage coefficient of group i >= 1 against the favored group:
// alpha_i = ((1-theta) y_1 + theta) / ((1-theta) y_i). Infinite at theta = 1.
double alpha_coefficient(const Scenario& s, Index i);

// Consumption-share weighted mean rate rho* = sum rho_i x_i / sum x_i.
double equivalent_rho(const Eigen::Ref<const Vec>& rates,
                      const Eigen::Ref<const Vec>& consumption);

// Utility of consuming x at time t under the blended rate rho*.
double equivalent_utility(double x, double rho_star, double t, double sigma);

// The closed-form first-order split. Shares are computed in log space so
// large r * (rho_1 - rho_i) * t tilts do not overflow; theta = 1 yields
// (w, 0, ..., 0).
Allocation allocate(const Scenario& s);

enum class TimeLimit { t_zero, t_infinity };

// Limit allocations. t_zero uses the undiscounted share formula directly;
// t_infinity keeps only the groups whose share growth exponent
// r * (rho_1 - rho_i) is maximal and splits among them by the
// theta-adjusted weight ratio (ties by (y_n / y_m)^r). The validity flag is
// the literal minimum-utility check at the limit consumption, with starved
// groups ranked by their limit utilities.
Allocation allocate_limit(const Scenario& s, TimeLimit limit);

// Dedicated small-n and symmetric closed forms, algebraically independent
// of allocate's share representation; used as cross-checks.
Vec two_group_consumption(const Scenario& s);
Vec three_group_consumption(const Scenario& s);
Vec equal_wealth_consumption(const Scenario& s);

}  // namespace sdr
