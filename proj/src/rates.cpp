#include "sdr/rates.hpp"

#include "sdr/allocation.hpp"

#include <cmath>

namespace sdr {

namespace {

void check_group_arrays(const Eigen::Ref<const Vec>& weights,
                        const Eigen::Ref<const Vec>& rates) {
    if (weights.size() != rates.size() || weights.size() == 0)
        throw std::invalid_argument("groups: weights and rates must match and be nonempty");
    if (!(weights > 0.0).all())
        throw std::invalid_argument("groups: weights must be positive");
    if (!(rates >= 0.0).all() || !(rates <= 1.0).all())
        throw std::invalid_argument("groups: rates must lie in [0, 1]");
}

void check_growth(const GrowthModel& m) {
    if (!(m.exponent > 0.0 && m.exponent < 1.0))
        throw std::invalid_argument("growth: exponent must lie in (0, 1)");
    if (!(m.depreciation >= 0.0))
        throw std::invalid_argument("growth: depreciation must be nonnegative");
    if (!(m.stock > 0.0))
        throw std::invalid_argument("growth: stock must be positive");
}

// weights tilted by e^(-(rho_i - min rho) t); proportional to y_i e^(-rho_i t)
Vec tilted_weights(const Eigen::Ref<const Vec>& weights,
                   const Eigen::Ref<const Vec>& rates, double t) {
    const double rmin = rates.minCoeff();
    Vec w(weights.size());
    for (Index i = 0; i < weights.size(); ++i)
        w[i] = weights[i] * std::exp(-(rates[i] - rmin) * t);
    return w;
}

}  // namespace

Vec efficient_shares(const Eigen::Ref<const Vec>& weights,
                     const Eigen::Ref<const Vec>& rates, double eta, double t,
                     double total, ShareMode mode) {
    check_group_arrays(weights, rates);
    if (!(eta > 0.0)) throw std::invalid_argument("efficient_shares: eta must be positive");
    if (!(t >= 0.0)) throw std::invalid_argument("efficient_shares: t must be nonnegative");
    if (!(total > 0.0)) throw std::invalid_argument("efficient_shares: total must be positive");

    Vec w = tilted_weights(weights, rates, t);
    if (mode == ShareMode::crra)
        for (Index i = 0; i < w.size(); ++i) w[i] = std::pow(w[i], 1.0 / eta);
    return w * (total / w.sum());
}

double rho_welfare(const Eigen::Ref<const Vec>& weights,
                   const Eigen::Ref<const Vec>& rates, double t) {
    check_group_arrays(weights, rates);
    if (!(t >= 0.0)) throw std::invalid_argument("rho_welfare: t must be nonnegative");
    const Vec w = tilted_weights(weights, rates, t);
    return (rates * w).sum() / w.sum();
}

double growth_f(const GrowthModel& m) {
    check_growth(m);
    return std::pow(m.stock, m.exponent) - m.depreciation * m.stock;
}

double growth_f_prime(const GrowthModel& m) {
    check_growth(m);
    return m.exponent * std::pow(m.stock, m.exponent - 1.0) - m.depreciation;
}

double j_ratio(const Eigen::Ref<const Vec>& consumption) {
    if (consumption.size() == 0)
        throw std::invalid_argument("j_ratio: empty consumption vector");
    if (!(consumption >= 0.0).all())
        throw std::invalid_argument("j_ratio: consumption must be nonnegative");
    const double total = consumption.sum();
    if (!(total > 0.0))
        throw std::invalid_argument("j_ratio: total consumption must be positive");
    return consumption.square().sum() / (total * total);
}

double rho_policy(const Eigen::Ref<const Vec>& weights,
                  const Eigen::Ref<const Vec>& rates, double eta,
                  const GrowthModel& model, double t, PolicyMode mode,
                  double aggregate) {
    const Vec x = efficient_shares(weights, rates, eta, t, aggregate, ShareMode::crra);
    const double j = j_ratio(x);
    double rv = 0.0;
    switch (mode) {
        case PolicyMode::display:
            rv = (rates * x.square()).sum() / x.square().sum();
            break;
        case PolicyMode::tolerance:
            rv = (rates * x).sum() / x.sum();
            break;
    }
    return (1.0 - j) * growth_f_prime(model) + j * rv;
}

RateComparison compare_rates(const Scenario& s, double eta, const GrowthModel& model,
                             double t, PolicyMode mode, double aggregate) {
    const Scenario at = s.at_time(t);
    RateComparison r;
    r.t = t;
    r.rho_lobby = allocate(at).equivalent_rate;
    r.rho_welfare = rho_welfare(s.weights(), s.rates(), t);
    r.rho_policy = rho_policy(s.weights(), s.rates(), eta, model, t, mode, aggregate);
    r.delta_disagreement = r.rho_lobby - r.rho_welfare;
    return r;
}

double integrate_stock(const GrowthModel& model,
                       const std::function<double(double)>& consumption,
                       double t_end, double step) {
    check_growth(model);
    if (!(step > 0.0)) throw std::invalid_argument("integrate_stock: step must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("integrate_stock: t_end must be nonnegative");

    const auto f = [&](double time, double stock) {
        return std::pow(stock, model.exponent) - model.depreciation * stock -
               consumption(time);
    };
    double s = model.stock;
    const auto nsteps =
        static_cast<long long>(std::ceil(t_end / step - 1e-12));
    for (long long i = 0; i < nsteps; ++i) {
        const double t0 = static_cast<double>(i) * step;
        const double h = std::min(step, t_end - t0);
        const double k1 = f(t0, s);
        const double k2 = f(t0 + 0.5 * h, s + 0.5 * h * k1);
        const double k3 = f(t0 + 0.5 * h, s + 0.5 * h * k2);
        const double k4 = f(t0 + h, s + h * k3);
        s += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(s > 0.0))
            throw std::domain_error("integrate_stock: stock exhausted before t_end");
    }
    return s;
}

}  // namespace sdr
