#include "sdr/types.hpp"

#include <cmath>
#include <string>

namespace sdr {

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Scenario::Scenario(const std::vector<Group>& groups, double theta, double sigma,
                   double total_resource, double time)
    : theta_(theta), sigma_(sigma), total_resource_(total_resource), time_(time) {
    check(!groups.empty(), "scenario: at least one group required");
    check(theta >= 0.0 && theta <= 1.0, "scenario: theta must lie in [0, 1]");
    check(std::isfinite(sigma) && sigma > 0.0, "scenario: sigma must be positive");
    check(std::isfinite(total_resource) && total_resource > 0.0,
          "scenario: total resource must be positive");
    check(std::isfinite(time) && time >= 0.0, "scenario: time must be nonnegative");

    const Index n = static_cast<Index>(groups.size());
    weights_.resize(n);
    rates_.resize(n);
    double sum = 0.0;
    for (Index i = 0; i < n; ++i) {
        const Group& g = groups[static_cast<std::size_t>(i)];
        check(std::isfinite(g.wealth_weight) && g.wealth_weight > 0.0,
              "scenario: wealth weights must be positive");
        check(std::isfinite(g.discount_rate) && g.discount_rate >= 0.0 &&
                  g.discount_rate <= 1.0,
              "scenario: discount rates must lie in [0, 1]");
        weights_[i] = g.wealth_weight;
        rates_[i] = g.discount_rate;
        sum += g.wealth_weight;
    }
    weights_ /= sum;
}

Scenario Scenario::at_time(double time) const {
    Scenario s = *this;
    check(std::isfinite(time) && time >= 0.0, "scenario: time must be nonnegative");
    s.time_ = time;
    return s;
}

Scenario Scenario::at_theta(double theta) const {
    Scenario s = *this;
    check(theta >= 0.0 && theta <= 1.0, "scenario: theta must lie in [0, 1]");
    s.theta_ = theta;
    return s;
}

}  // namespace sdr
