#include "doctest.h"

#include "sdr/allocation.hpp"
#include "sdr/rates.hpp"
#include "test_helpers.hpp"

#include <cmath>

using namespace sdr;
using namespace sdr::test;

namespace {

Vec benchmark_weights() {
    Vec y(3);
    y << 0.5, 0.3, 0.2;
    return y;
}

Vec benchmark_rates() {
    Vec r(3);
    r << 0.01, 0.02, 0.03;
    return r;
}

}  // namespace

TEST_CASE("efficient shares, literal mode") {
    const Vec y = benchmark_weights();
    const Vec r = benchmark_rates();

    Vec at0 = efficient_shares(y, r, 2.0, 0.0, 1.0);
    CHECK(close(at0[0], 0.5, 1e-15));
    CHECK(close(at0[1], 0.3, 1e-15));
    CHECK(close(at0[2], 0.2, 1e-15));

    // scaled to the natural aggregate, the shares are the raw tilted weights
    const double natural = 0.5 * std::exp(-0.01) + 0.3 * std::exp(-0.02) +
                           0.2 * std::exp(-0.03);
    Vec at1 = efficient_shares(y, r, 2.0, 1.0, natural);
    CHECK(close(at1[0], 0.49502491687458406, 1e-14));
    CHECK(close(at1[1], 0.29405960199202657, 1e-14));
    CHECK(close(at1[2], 0.19408910670970354, 1e-14));

    Vec eq = efficient_shares(Vec::Ones(4), Vec::Constant(4, 0.02), 2.0, 7.0, 2.0);
    for (Index i = 0; i < 4; ++i) CHECK(close(eq[i], 0.5, 1e-14));

    CHECK_THROWS_AS(efficient_shares(y, r, 0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(efficient_shares(y, r, 2.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(efficient_shares(y, r, 2.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("efficient shares, crra mode") {
    const Vec y = benchmark_weights();
    const Vec r = benchmark_rates();
    Vec x = efficient_shares(y, r, 2.0, 1.0, 1.0, ShareMode::crra);
    CHECK(close(x.sum(), 1.0, 1e-12));
    // square-root weights: x_i^2 proportional to y_i e^(-rho_i t)
    const double k0 = x[0] * x[0] / (0.5 * std::exp(-0.01));
    const double k1 = x[1] * x[1] / (0.3 * std::exp(-0.02));
    const double k2 = x[2] * x[2] / (0.2 * std::exp(-0.03));
    CHECK(close(k0, k1, 1e-12));
    CHECK(close(k1, k2, 1e-12));

    // eta = 1 collapses to the literal profile
    Vec lit = efficient_shares(y, r, 1.0, 3.0, 1.0, ShareMode::literal);
    Vec crra1 = efficient_shares(y, r, 1.0, 3.0, 1.0, ShareMode::crra);
    CHECK((lit - crra1).abs().maxCoeff() <= 1e-14);
}

TEST_CASE("efficient shares survive huge horizons") {
    const Vec y = benchmark_weights();
    const Vec r = benchmark_rates();
    Vec x = efficient_shares(y, r, 2.0, 1e6, 1.0, ShareMode::crra);
    CHECK(x.allFinite());
    CHECK(close(x.sum(), 1.0, 1e-12));
    CHECK(close(x[0], 1.0, 1e-12));
}

TEST_CASE("welfare-equivalent rate on the benchmark") {
    const Vec y = benchmark_weights();
    const Vec r = benchmark_rates();
    CHECK(close(rho_welfare(y, r, 0.0), 0.017, 1e-15));
    CHECK(close(rho_welfare(y, r, 1.0), 0.0169391387000594, 1e-13));
    CHECK(close(rho_welfare(y, r, 1.0), 0.0169394, 1e-6));
    CHECK(close(rho_welfare(y, r, 1e6), 0.01, 1e-12));
    CHECK_THROWS_AS(rho_welfare(y, r, -0.5), std::invalid_argument);
}

TEST_CASE("welfare-equivalent rate is nonincreasing and converges to the minimum") {
    ScenarioGen gen(2718);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = gen.pick(2, 8);
        Vec y(n), r(n);
        for (int i = 0; i < n; ++i) {
            y[i] = gen.uniform(0.05, 5.0);
            r[i] = gen.uniform(0.0, 0.1);
        }
        double prev = rho_welfare(y, r, 0.0);
        CHECK(close(prev, (y * r).sum() / y.sum(), 1e-14));
        for (double t : {0.5, 1.0, 5.0, 20.0, 100.0, 1000.0, 1e5}) {
            const double cur = rho_welfare(y, r, t);
            CAPTURE(rep);
            CHECK(cur <= prev + 1e-14);
            prev = cur;
        }
        CHECK(close(rho_welfare(y, r, 1e7), r.minCoeff(), 1e-10));
    }
}

TEST_CASE("growth primitive") {
    GrowthModel m{0.3, 0.05, 1.0};
    CHECK(close(growth_f(m), 0.95, 1e-15));
    CHECK(close(growth_f_prime(m), 0.25, 1e-15));

    GrowthModel plain{0.4, 0.0, 1.0};
    CHECK(close(growth_f(plain), 1.0, 1e-15));
    CHECK(close(growth_f_prime(plain), 0.4, 1e-15));

    for (double s = 0.1; s <= 10.0; s += 0.37) {
        GrowthModel at{0.3, 0.05, s};
        const double h = 1e-6;
        GrowthModel up{0.3, 0.05, s + h}, dn{0.3, 0.05, s - h};
        const double fd = (growth_f(up) - growth_f(dn)) / (2.0 * h);
        CHECK(close(growth_f_prime(at), fd, 1e-6));
    }

    CHECK_THROWS_AS(growth_f({0.0, 0.05, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(growth_f({1.0, 0.05, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(growth_f({0.3, -0.1, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(growth_f({0.3, 0.05, 0.0}), std::invalid_argument);
}

TEST_CASE("concentration index") {
    Vec even(2);
    even << 0.5, 0.5;
    CHECK(j_ratio(even) == 0.5);
    Vec one(2);
    one << 1.0, 0.0;
    CHECK(j_ratio(one) == 1.0);
    Vec skew(2);
    skew << 0.6, 0.4;
    CHECK(close(j_ratio(skew), 0.52, 1e-15));

    ScenarioGen gen(1414);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = gen.pick(1, 9);
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = gen.uniform(0.0, 3.0);
        if (!(x.sum() > 0.0)) continue;
        const double j = j_ratio(x);
        CHECK(j >= 1.0 / n - 1e-14);
        CHECK(j <= 1.0 + 1e-14);
    }
    Vec equal = Vec::Constant(5, 0.2);
    CHECK(close(j_ratio(equal), 0.2, 1e-15));

    CHECK_THROWS_AS(j_ratio(Vec::Zero(3)), std::invalid_argument);
    Vec neg(2);
    neg << 1.0, -0.1;
    CHECK_THROWS_AS(j_ratio(neg), std::invalid_argument);
}

TEST_CASE("policy-equivalent rate") {
    GrowthModel m{0.3, 0.05, 1.0};  // F' = 0.25
    Vec y = Vec::Ones(2);
    Vec r(2);
    r << 0.01, 0.03;

    // t = 0 with equal weights puts half the aggregate on each group
    CHECK(close(rho_policy(y, r, 2.0, m, 0.0, PolicyMode::tolerance), 0.135, 1e-14));
    CHECK(close(rho_policy(y, r, 2.0, m, 0.0, PolicyMode::display), 0.135, 1e-14));

    // benchmark groups at eta = 2: squared crra shares reproduce the tilted
    // weights, so display-mode rho^V equals rho_welfare exactly
    const Vec by = benchmark_weights();
    const Vec br = benchmark_rates();
    const Vec x = efficient_shares(by, br, 2.0, 1.0, 1.0, ShareMode::crra);
    const double j = j_ratio(x);
    CHECK(close(j, 0.3457043422157784, 1e-13));
    const double expected_display =
        (1.0 - j) * 0.25 + j * rho_welfare(by, br, 1.0);
    CHECK(close(rho_policy(by, br, 2.0, m, 1.0, PolicyMode::display),
                expected_display, 1e-14));
    CHECK(close(rho_policy(by, br, 2.0, m, 1.0, PolicyMode::display),
                0.16942984824806126, 1e-13));

    // single group collapses to rho^V regardless of the growth model
    Vec y1 = Vec::Ones(1), r1 = Vec::Constant(1, 0.04);
    CHECK(close(rho_policy(y1, r1, 2.0, m, 3.0), 0.04, 1e-15));

    // convex combination bounds
    ScenarioGen gen(369);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = gen.pick(1, 6);
        Vec yy(n), rr(n);
        for (int i = 0; i < n; ++i) {
            yy[i] = gen.uniform(0.05, 3.0);
            rr[i] = gen.uniform(0.0, 0.1);
        }
        GrowthModel gm{gen.uniform(0.1, 0.9), gen.uniform(0.0, 0.2),
                       gen.uniform(0.2, 5.0)};
        const double t = gen.uniform(0.0, 50.0);
        const double eta = gen.uniform(0.5, 4.0);
        const auto mode = rep % 2 == 0 ? PolicyMode::display : PolicyMode::tolerance;
        const double rp = rho_policy(yy, rr, eta, gm, t, mode);
        const double fp = growth_f_prime(gm);
        const double lo = std::min(fp, rr.minCoeff());
        const double hi = std::max(fp, rr.maxCoeff());
        CAPTURE(rep);
        CHECK(rp >= lo - 1e-12);
        CHECK(rp <= hi + 1e-12);
    }
}

TEST_CASE("tolerance-mode rho^V is the plain weighted mean") {
    ScenarioGen gen(24601);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = gen.pick(2, 6);
        Vec yy(n), rr(n);
        for (int i = 0; i < n; ++i) {
            yy[i] = gen.uniform(0.05, 3.0);
            rr[i] = gen.uniform(0.0, 0.1);
        }
        const double t = gen.uniform(0.0, 10.0);
        const double eta = gen.uniform(0.5, 4.0);
        GrowthModel gm{0.3, 0.05, 1.0};
        const Vec x = efficient_shares(yy, rr, eta, t, 1.0, ShareMode::crra);
        const double j = j_ratio(x);
        const double expected =
            (1.0 - j) * growth_f_prime(gm) + j * equivalent_rho(rr, x);
        CHECK(close(rho_policy(yy, rr, eta, gm, t, PolicyMode::tolerance), expected,
                    1e-13));
    }
}

TEST_CASE("three-rate comparison on the benchmark scenario") {
    Scenario s = benchmark_scenario();
    GrowthModel m{0.3, 0.05, 1.0};
    RateComparison rc = compare_rates(s, 2.0, m, 1.0);
    CHECK(close(rc.t, 1.0, 0.0));
    CHECK(close(rc.rho_lobby, 0.017716764265429057, 1e-13));
    CHECK(close(rc.rho_welfare, 0.0169391387000594, 1e-13));
    CHECK(close(rc.delta_disagreement, rc.rho_lobby - rc.rho_welfare, 1e-16));
    CHECK(rc.rho_policy > rc.rho_welfare);  // F' = 0.25 pulls the policy rate up

    const double lo = s.rates().minCoeff();
    const double hi = std::max(s.rates().maxCoeff(), growth_f_prime(m));
    for (double v : {rc.rho_lobby, rc.rho_welfare, rc.rho_policy}) {
        CHECK(v >= lo - 1e-12);
        CHECK(v <= hi + 1e-12);
    }
}

TEST_CASE("lobby rate falls strictly with theta on the benchmark") {
    Scenario s = benchmark_scenario();
    GrowthModel m{0.3, 0.05, 1.0};
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 20; ++i) {
        const double theta = 0.99 * i / 20.0;
        RateComparison rc = compare_rates(s.at_theta(theta), 2.0, m, 1.0);
        CHECK(rc.rho_lobby < prev);
        prev = rc.rho_lobby;
    }
    // theta = 0, t = 0, equal rates: all rates coincide
    Scenario eq = make_scenario({0.5, 0.5}, {0.02, 0.02}, 0.0, 2.0, 1.0, 0.0);
    RateComparison rc = compare_rates(eq, 2.0, m, 0.0);
    CHECK(close(rc.rho_lobby, 0.02, 1e-15));
    CHECK(close(rc.rho_welfare, 0.02, 1e-15));
    CHECK(close(rc.delta_disagreement, 0.0, 1e-16));
}

TEST_CASE("stock integration matches the separable closed form") {
    // delta = 0, gamma = 1/2, no consumption: S(t) = (sqrt(S0) + t/2)^2
    GrowthModel m{0.5, 0.0, 1.0};
    const auto none = [](double) { return 0.0; };
    CHECK(close(integrate_stock(m, none, 4.0, 0.01), 9.0, 1e-9));
    CHECK(close(integrate_stock(m, none, 0.0, 0.01), 1.0, 0.0));
    GrowthModel m2{0.5, 0.0, 4.0};
    CHECK(close(integrate_stock(m2, none, 3.0, 0.01), 12.25, 1e-9));

    // uneven final step
    CHECK(close(integrate_stock(m, none, 1.005, 0.01),
                std::pow(1.0 + 1.005 / 2.0, 2.0), 1e-9));

    // heavy constant drain exhausts the stock
    const auto heavy = [](double) { return 50.0; };
    CHECK_THROWS_AS(integrate_stock(m, heavy, 1.0, 0.01), std::domain_error);
    CHECK_THROWS_AS(integrate_stock(m, none, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_stock(m, none, -1.0, 0.01), std::invalid_argument);
}
