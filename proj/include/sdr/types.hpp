#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sdr {

using Vec = Eigen::ArrayXd;
using Index = Eigen::Index;

// One interest group lobbying the planner. Weights are relative and get
// normalized when a Scenario is built; rates are pure-time-preference
// rates per unit time.
struct Group {
    double wealth_weight = 0.0;
    double discount_rate = 0.0;
};

// Immutable planner problem: groups, inequality aversion theta, CRRA
// curvature sigma, the resource w to split, and the evaluation time t.
// Group 0 is the favored group (the one whose minimum-utility status the
// closed form assumes). Weights are normalized to sum to one on
// construction; invalid parameters throw std::invalid_argument.
class Scenario {
  public:
    Scenario(const std::vector<Group>& groups, double theta, double sigma,
             double total_resource, double time);

    Index size() const { return weights_.size(); }
    const Vec& weights() const { return weights_; }
    const Vec& rates() const { return rates_; }
    double theta() const { return theta_; }
    double sigma() const { return sigma_; }
    double elasticity() const { return 1.0 / sigma_; }
    double total_resource() const { return total_resource_; }
    double time() const { return time_; }

    // Same groups and preferences, evaluated at a different time or theta.
    Scenario at_time(double time) const;
    Scenario at_theta(double theta) const;

  private:
    Vec weights_;
    Vec rates_;
    double theta_;
    double sigma_;
    double total_resource_;
    double time_;
};

// Result of the planner's closed-form split. min_utility_at_favored
// reports whether group 0 actually ends up with the lowest discounted
// utility; when it is false the formula value is still returned but it is
// not the constrained welfare maximum (the optimum then sits on a
// utility-equalizing kink of the min term).
struct Allocation {
    Vec consumption;
    double equivalent_rate = 0.0;
    bool min_utility_at_favored = false;
};

}  // namespace sdr
