#include "sdr/allocation.hpp"

#include <cmath>
#include <limits>

namespace sdr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Scalar std::exp so that -inf log terms land exactly on zero (Eigen's
// vectorized exp clamps the argument and returns a subnormal instead).
Vec softmax(const Vec& logs) {
    const double m = logs.maxCoeff();
    Vec e(logs.size());
    for (Index i = 0; i < logs.size(); ++i) e[i] = std::exp(logs[i] - m);
    return e / e.sum();
}

// Does group 0 attain the minimum discounted utility at x (ties allowed)?
bool favored_is_min(const Scenario& s, const Vec& x) {
    const double u0 =
        discounted_utility_limit(x[0], s.rates()[0], s.time(), s.sigma());
    const double tol = 1e-12 * (1.0 + std::abs(u0));
    for (Index i = 1; i < s.size(); ++i) {
        const double ui =
            discounted_utility_limit(x[i], s.rates()[i], s.time(), s.sigma());
        if (ui < u0 - tol) return false;
    }
    return true;
}

}  // namespace

double felicity(double x, double sigma) {
    if (!(std::isfinite(sigma) && sigma > 0.0))
        throw std::invalid_argument("felicity: sigma must be positive");
    if (!(x > 0.0)) throw std::domain_error("felicity: consumption must be positive");
    if (sigma == 1.0) return std::log(x);
    return std::pow(x, 1.0 - sigma) / (1.0 - sigma);
}

double discounted_utility(double x, double rho, double t, double sigma) {
    return felicity(x, sigma) * std::exp(-rho * t);
}

double discounted_utility_limit(double x, double rho, double t, double sigma) {
    if (x > 0.0) return discounted_utility(x, rho, t, sigma);
    if (x < 0.0) throw std::domain_error("utility: consumption must be nonnegative");
    return sigma < 1.0 ? 0.0 : -kInf;
}

double welfare(const Scenario& s, const Eigen::Ref<const Vec>& consumption) {
    if (consumption.size() != s.size())
        throw std::invalid_argument("welfare: consumption length must match group count");
    double weighted = 0.0;
    double min_u = kInf;
    for (Index i = 0; i < s.size(); ++i) {
        const double u =
            discounted_utility(consumption[i], s.rates()[i], s.time(), s.sigma());
        weighted += s.weights()[i] * u;
        min_u = std::min(min_u, u);
    }
    return (1.0 - s.theta()) * weighted + s.theta() * min_u;
}

double alpha_coefficient(const Scenario& s, Index i) {
    if (i < 1 || i >= s.size())
        throw std::invalid_argument("alpha_coefficient: index must be in [1, n)");
    const double th = s.theta();
    return ((1.0 - th) * s.weights()[0] + th) / ((1.0 - th) * s.weights()[i]);
}

double equivalent_rho(const Eigen::Ref<const Vec>& rates,
                      const Eigen::Ref<const Vec>& consumption) {
    if (rates.size() != consumption.size())
        throw std::invalid_argument("equivalent_rho: length mismatch");
    if ((consumption < 0.0).any())
        throw std::invalid_argument("equivalent_rho: consumption must be nonnegative");
    const double total = consumption.sum();
    if (!(total > 0.0))
        throw std::invalid_argument("equivalent_rho: total consumption must be positive");
    return (rates * consumption).sum() / total;
}

double equivalent_utility(double x, double rho_star, double t, double sigma) {
    return discounted_utility(x, rho_star, t, sigma);
}

Allocation allocate(const Scenario& s) {
    const Index n = s.size();
    const auto& y = s.weights();
    const auto& rho = s.rates();
    const double th = s.theta();
    const double r = s.elasticity();
    const double t = s.time();

    // log share of each group's first-order term; the favored group gets the
    // theta bonus, the rest carry the discount tilt exp(r (rho_1 - rho_i) t)
    Vec logs(n);
    logs[0] = r * std::log((1.0 - th) * y[0] + th);
    for (Index i = 1; i < n; ++i)
        logs[i] = r * std::log((1.0 - th) * y[i]) + r * (rho[0] - rho[i]) * t;

    Allocation a;
    a.consumption = s.total_resource() * softmax(logs);
    a.equivalent_rate = equivalent_rho(rho, a.consumption);
    a.min_utility_at_favored = favored_is_min(s, a.consumption);
    return a;
}

Allocation allocate_limit(const Scenario& s, TimeLimit limit) {
    const Index n = s.size();
    const auto& y = s.weights();
    const auto& rho = s.rates();
    const double th = s.theta();
    const double r = s.elasticity();
    const double w = s.total_resource();

    Allocation a;
    if (limit == TimeLimit::t_zero) {
        Vec shares(n);
        shares[0] = std::pow((1.0 - th) * y[0] + th, r);
        for (Index i = 1; i < n; ++i) shares[i] = std::pow((1.0 - th) * y[i], r);
        a.consumption = w * shares / shares.sum();
        a.equivalent_rate = equivalent_rho(rho, a.consumption);
        const Scenario s0 = s.at_time(0.0);
        a.min_utility_at_favored = favored_is_min(s0, a.consumption);
        return a;
    }

    // t -> infinity: share i grows like a_i exp(b_i t); groups with a_i = 0
    // are exactly zero at every finite t, the rest are dominated by the
    // maximal growth exponent, with ties split by the constant weights.
    Vec a_const(n), b(n);
    a_const[0] = std::pow((1.0 - th) * y[0] + th, r);
    b[0] = 0.0;
    for (Index i = 1; i < n; ++i) {
        a_const[i] = std::pow((1.0 - th) * y[i], r);
        b[i] = r * (rho[0] - rho[i]);
    }
    double bmax = -kInf;
    for (Index i = 0; i < n; ++i)
        if (a_const[i] > 0.0) bmax = std::max(bmax, b[i]);
    Vec x = Vec::Zero(n);
    for (Index i = 0; i < n; ++i)
        if (a_const[i] > 0.0 && b[i] == bmax) x[i] = a_const[i];
    a.consumption = w * x / x.sum();
    a.equivalent_rate = equivalent_rho(rho, a.consumption);
    a.min_utility_at_favored = favored_is_min(s, a.consumption);
    return a;
}

Vec two_group_consumption(const Scenario& s) {
    if (s.size() != 2)
        throw std::invalid_argument("two_group_consumption: exactly two groups required");
    const double r = s.elasticity();
    const double w = s.total_resource();
    const double tilt = std::exp((s.rates()[0] - s.rates()[1]) * s.time());
    Vec x(2);
    x[0] = w / (1.0 + std::pow(tilt / alpha_coefficient(s, 1), r));
    x[1] = w - x[0];
    return x;
}

Vec three_group_consumption(const Scenario& s) {
    if (s.size() != 3)
        throw std::invalid_argument("three_group_consumption: exactly three groups required");
    const auto& y = s.weights();
    const auto& rho = s.rates();
    const double r = s.elasticity();
    const double t = s.time();
    const double w = s.total_resource();

    double denom = 1.0;
    for (Index i = 1; i < 3; ++i)
        denom += std::pow(std::exp((rho[0] - rho[i]) * t) / alpha_coefficient(s, i), r);
    Vec x(3);
    x[0] = w / denom;
    // the unfavored pair splits the remainder by its own first-order ratio
    const double rest = w - x[0];
    const double ratio32 = std::pow((y[2] / y[1]) * std::exp((rho[1] - rho[2]) * t), r);
    x[1] = rest / (1.0 + ratio32);
    x[2] = rest - x[1];
    return x;
}

Vec equal_wealth_consumption(const Scenario& s) {
    const Index n = s.size();
    const auto& y = s.weights();
    const auto& rho = s.rates();
    for (Index i = 1; i < n; ++i)
        if (std::abs(y[i] - y[0]) > 1e-12)
            throw std::invalid_argument("equal_wealth_consumption: weights must be equal");

    const double r = s.elasticity();
    const double t = s.time();
    const double w = s.total_resource();
    const double alpha = n > 1 ? alpha_coefficient(s, 1) : 1.0;

    Vec x(n);
    double tail = 0.0;
    for (Index i = 1; i < n; ++i) {
        double denom = std::pow(alpha, r) * std::exp(-r * (rho[0] - rho[i]) * t);
        for (Index j = 1; j < n; ++j) denom += std::exp(r * (rho[i] - rho[j]) * t);
        x[i] = w / denom;
        tail += x[i];
    }
    x[0] = w - tail;
    return x;
}

}  // namespace sdr
