#include "sdr/oracle.hpp"

#include "sdr/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace sdr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Planner objective extended to zero consumption via the limit utilities,
// so kink walks can probe the boundary without throwing.
double extended_welfare(const Scenario& s, const Vec& x) {
    double weighted = 0.0;
    double min_u = kInf;
    for (Index i = 0; i < s.size(); ++i) {
        const double u =
            discounted_utility_limit(x[i], s.rates()[i], s.time(), s.sigma());
        weighted += s.weights()[i] * u;
        min_u = std::min(min_u, u);
    }
    if (min_u == -kInf) return -kInf;
    return (1.0 - s.theta()) * weighted + s.theta() * min_u;
}

class SimplexSearch {
  public:
    SimplexSearch(const Scenario& s, double floor) : s_(s), floor_(floor) {}

    double eval(const Vec& x) {
        ++evals_;
        return extended_welfare(s_, x);
    }

    std::int64_t evals() const { return evals_; }

    // Largest step along d from x keeping every coordinate at or above the
    // floor. Directions all sum to zero, so the budget is preserved.
    double max_step(const Vec& x, const Vec& d) const {
        double tm = kInf;
        for (Index k = 0; k < x.size(); ++k)
            if (d[k] < 0.0) tm = std::min(tm, (x[k] - floor_) / -d[k]);
        return std::max(tm, 0.0);
    }

    // Ordered pairwise transfers e_i - e_j, then a pooled transfer from each
    // group outside the current minimum-utility set into that set (the
    // direction that slides along the kink when several utilities tie).
    std::vector<Vec> directions(const Vec& x) const {
        const Index n = x.size();
        std::vector<Vec> dirs;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                if (i == j) continue;
                Vec d = Vec::Zero(n);
                d[i] = 1.0;
                d[j] = -1.0;
                dirs.push_back(std::move(d));
            }
        if (n < 2) return dirs;

        Vec u(n);
        for (Index i = 0; i < n; ++i)
            u[i] = discounted_utility_limit(x[i], s_.rates()[i], s_.time(), s_.sigma());
        const double m = u.minCoeff();
        const double tol = 1e-9 * (1.0 + std::abs(m));
        std::vector<Index> min_set;
        for (Index i = 0; i < n; ++i)
            if (u[i] <= m + tol) min_set.push_back(i);
        if (min_set.size() == static_cast<std::size_t>(n)) return dirs;
        for (Index j = 0; j < n; ++j) {
            if (std::find(min_set.begin(), min_set.end(), j) != min_set.end()) continue;
            Vec d = Vec::Zero(n);
            for (Index k : min_set) d[k] = 1.0 / static_cast<double>(min_set.size());
            d[j] = -1.0;
            dirs.push_back(std::move(d));
        }
        return dirs;
    }

  private:
    const Scenario& s_;
    double floor_;
    std::int64_t evals_ = 0;
};

}  // namespace

OracleResult maximize(const Scenario& s, double resolution, double positivity_floor) {
    const Index n = s.size();
    const double w = s.total_resource();
    if (n > 4)
        throw std::invalid_argument("maximize: supports at most four groups");
    if (!(std::isfinite(resolution) && resolution > 0.0))
        throw std::invalid_argument("maximize: resolution must be positive");
    if (!(std::isfinite(positivity_floor) && positivity_floor > 0.0 &&
          positivity_floor * static_cast<double>(n) < w))
        throw std::invalid_argument("maximize: positivity floor must be positive and feasible");

    SimplexSearch search(s, positivity_floor);

    // lattice x_i = floor + k_i h over compositions sum k_i = cells
    const auto cells = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::llround(w / resolution)));
    const double span = w - static_cast<double>(n) * positivity_floor;
    const double h0 = span / static_cast<double>(cells);

    Vec x(n), best(n);
    double best_w = -kInf;
    std::vector<std::int64_t> k(static_cast<std::size_t>(n), 0);
    const auto scan = [&](auto&& self, Index pos, std::int64_t left) -> void {
        if (pos == n - 1) {
            k[static_cast<std::size_t>(pos)] = left;
            for (Index i = 0; i < n; ++i)
                x[i] = positivity_floor +
                       static_cast<double>(k[static_cast<std::size_t>(i)]) * h0;
            const double v = search.eval(x);
            if (v > best_w) {
                best_w = v;
                best = x;
            }
            return;
        }
        for (std::int64_t c = 0; c <= left; ++c) {
            k[static_cast<std::size_t>(pos)] = c;
            self(self, pos + 1, left - c);
        }
    };
    scan(scan, 0, cells);
    x = best;

    // pattern phase: ten halvings of greedy unit-step walks
    double h = h0;
    for (int level = 0; level < 10; ++level) {
        h *= 0.5;
        for (int sweep = 0; sweep < 200; ++sweep) {
            bool improved = false;
            for (const Vec& d : search.directions(x)) {
                while (search.max_step(x, d) >= h) {
                    const Vec cand = x + h * d;
                    const double v = search.eval(cand);
                    if (!(v > best_w)) break;
                    x = cand;
                    best_w = v;
                    improved = true;
                }
            }
            if (!improved) break;
        }
    }

    // polish phase: golden-section line maxima along the same directions
    const double gold = 0.5 * (std::sqrt(5.0) - 1.0);
    const auto line_max = [&](const Vec& d) {
        double lo = 0.0;
        double hi = search.max_step(x, d);
        if (!(hi > 0.0)) return;
        double t1 = hi - gold * (hi - lo);
        double t2 = lo + gold * (hi - lo);
        double g1 = search.eval(x + t1 * d);
        double g2 = search.eval(x + t2 * d);
        for (int it = 0; it < 200 && hi - lo > 1e-13 * w; ++it) {
            if (g1 >= g2) {
                hi = t2;
                t2 = t1;
                g2 = g1;
                t1 = hi - gold * (hi - lo);
                g1 = search.eval(x + t1 * d);
            } else {
                lo = t1;
                t1 = t2;
                g1 = g2;
                t2 = lo + gold * (hi - lo);
                g2 = search.eval(x + t2 * d);
            }
        }
        const Vec cand = x + 0.5 * (lo + hi) * d;
        const double v = search.eval(cand);
        if (v > best_w) {
            x = cand;
            best_w = v;
        }
    };
    for (int cycle = 0; cycle < 40; ++cycle) {
        const double before = best_w;
        for (const Vec& d : search.directions(x)) line_max(d);
        if (!(best_w - before >= 1e-12)) break;
    }

    OracleResult res;
    res.argmax = x;
    res.welfare_value = best_w;
    res.grid_resolution = h;
    res.iterations = search.evals();
    return res;
}

OracleResult maximize(const Scenario& s, double resolution) {
    return maximize(s, resolution, 1e-9 * s.total_resource());
}

ValidationReport validate_closed_form(const Scenario& s, double resolution) {
    ValidationReport rep;
    const Allocation closed = allocate(s);
    rep.closed_form = closed.consumption;
    rep.closed_form_valid = closed.min_utility_at_favored;
    rep.oracle = maximize(s, resolution);
    rep.max_abs_gap = (closed.consumption - rep.oracle.argmax).abs().maxCoeff();
    rep.welfare_gap =
        rep.oracle.welfare_value - extended_welfare(s, closed.consumption);
    const bool gaps_within = rep.max_abs_gap <= 2.0 * rep.oracle.grid_resolution &&
                             std::abs(rep.welfare_gap) <= 1e-6;
    rep.flag_agrees = rep.closed_form_valid && gaps_within;
    return rep;
}

}  // namespace sdr
