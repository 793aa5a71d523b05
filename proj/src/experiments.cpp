#include "sdr/experiments.hpp"

#include "sdr/allocation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace sdr {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Short form for column labels, where round-trip precision is not wanted.
std::string label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string join(const Eigen::Ref<const Vec>& v) {
    std::ostringstream out;
    for (Index i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << fmt(v[i]);
    }
    return out.str();
}

ColumnSummary summarize(std::string name, const std::vector<double>& v) {
    ColumnSummary s;
    s.name = std::move(name);
    if (v.empty()) return s;
    double acc = 0.0;
    for (double x : v) acc += x;
    s.mean = acc / static_cast<double>(v.size());
    if (v.size() > 1) {
        double sq = 0.0;
        for (double x : v) sq += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(v.size() - 1));
    }
    return s;
}

// Sanity net behind every emitted row: the allocation invariants must hold
// no matter which experiment produced the row.
void assert_allocation_row(const Scenario& s, const Allocation& a) {
    const double w = s.total_resource();
    if (!a.consumption.allFinite() || (a.consumption < 0.0).any() ||
        std::abs(a.consumption.sum() - w) > 1e-9 * w)
        throw std::logic_error("experiment row violates the budget invariants");
    if (a.equivalent_rate < s.rates().minCoeff() - 1e-12 ||
        a.equivalent_rate > s.rates().maxCoeff() + 1e-12)
        throw std::logic_error("experiment row violates the blended-rate bounds");
}

const char* variable_name(SweepVariable v) {
    return v == SweepVariable::theta ? "theta" : "t";
}

bool wants(const SweepSpec& spec, OutputField f) {
    return std::find(spec.outputs.begin(), spec.outputs.end(), f) != spec.outputs.end();
}

std::vector<Group> figure_reference_groups() {
    return {{0.5, 0.01}, {0.3, 0.02}, {0.2, 0.03}};
}

std::vector<double> linspace(double lo, double hi, Index points) {
    std::vector<double> g(static_cast<std::size_t>(points));
    for (Index i = 0; i < points; ++i)
        g[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return g;
}

}  // namespace

void validate_record(const ExperimentRecord& rec) {
    if (rec.columns.empty())
        throw std::invalid_argument("record: no columns");
    if (rec.rows.empty())
        throw std::invalid_argument("record: no rows");
    for (const auto& row : rec.rows) {
        if (row.size() != rec.columns.size())
            throw std::invalid_argument("record: row width does not match columns");
        for (double v : row)
            if (!std::isfinite(v))
                throw std::invalid_argument("record: non-finite value in row");
    }
    for (const auto& h : rec.histograms) {
        if (h.edges.size() != h.counts.size() + 1)
            throw std::invalid_argument("record: histogram edge/count mismatch");
        if (!std::is_sorted(h.edges.begin(), h.edges.end()))
            throw std::invalid_argument("record: histogram edges must ascend");
    }
}

Histogram freedman_diaconis(std::string name, const Eigen::Ref<const Vec>& values) {
    if (values.size() == 0)
        throw std::invalid_argument("histogram: no values");
    if (!values.allFinite())
        throw std::invalid_argument("histogram: values must be finite");

    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const double lo = v.front();
    const double hi = v.back();

    Histogram h;
    h.name = std::move(name);
    if (hi == lo) {
        h.edges = {lo - 0.5, lo + 0.5};
        h.counts = {static_cast<std::int64_t>(v.size())};
        return h;
    }

    const auto quantile = [&](double p) {
        const double pos = p * static_cast<double>(v.size() - 1);
        const auto i = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(i);
        return i + 1 < v.size() ? v[i] * (1.0 - frac) + v[i + 1] * frac : v[i];
    };
    const double iqr = quantile(0.75) - quantile(0.25);
    const double width = 2.0 * iqr / std::cbrt(static_cast<double>(v.size()));
    std::size_t bins = 1;
    if (width > 0.0)
        bins = static_cast<std::size_t>(
            std::clamp(std::ceil((hi - lo) / width), 1.0, 10000.0));

    h.edges.resize(bins + 1);
    for (std::size_t k = 0; k <= bins; ++k)
        h.edges[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
    h.edges.back() = hi;
    h.counts.assign(bins, 0);
    for (double x : v) {
        auto idx = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
        if (idx >= bins) idx = bins - 1;
        ++h.counts[idx];
    }
    return h;
}

ExperimentRecord run_sweep(const SweepSpec& spec) {
    const Scenario& base = spec.base;
    if (spec.grid.empty())
        throw std::invalid_argument("sweep: grid must be nonempty");
    for (std::size_t i = 1; i < spec.grid.size(); ++i)
        if (!(spec.grid[i] > spec.grid[i - 1]))
            throw std::invalid_argument("sweep: grid must be strictly increasing");
    const double glo = spec.grid.front();
    const double ghi = spec.grid.back();
    if (spec.variable == SweepVariable::theta && (glo < 0.0 || ghi > 1.0))
        throw std::invalid_argument("sweep: theta grid must lie in [0, 1]");
    if (spec.variable == SweepVariable::time && glo < 0.0)
        throw std::invalid_argument("sweep: time grid must be nonnegative");
    if (spec.outputs.empty())
        throw std::invalid_argument("sweep: at least one output required");
    for (std::size_t i = 0; i < spec.outputs.size(); ++i)
        for (std::size_t j = i + 1; j < spec.outputs.size(); ++j)
            if (spec.outputs[i] == spec.outputs[j])
                throw std::invalid_argument("sweep: duplicate output field");
    const bool needs_alloc = wants(spec, OutputField::consumption) ||
                             wants(spec, OutputField::rho_lobby) ||
                             wants(spec, OutputField::delta_disagreement);
    const bool needs_welfare = wants(spec, OutputField::rho_welfare) ||
                               wants(spec, OutputField::delta_disagreement);
    const bool needs_policy = wants(spec, OutputField::rho_policy);
    if (needs_policy && !spec.growth)
        throw std::invalid_argument("sweep: rho_policy output requires a growth model");
    if (spec.stock_step && spec.variable != SweepVariable::time)
        throw std::invalid_argument("sweep: stock_step applies to time sweeps only");

    ExperimentRecord rec;
    rec.meta.emplace_back("experiment", "sweep");
    rec.meta.emplace_back("variable", variable_name(spec.variable));
    rec.meta.emplace_back("n_groups", std::to_string(base.size()));
    rec.meta.emplace_back("weights", join(base.weights()));
    rec.meta.emplace_back("rates", join(base.rates()));
    if (spec.variable != SweepVariable::theta)
        rec.meta.emplace_back("theta", fmt(base.theta()));
    if (spec.variable != SweepVariable::time)
        rec.meta.emplace_back("t", fmt(base.time()));
    rec.meta.emplace_back("sigma", fmt(base.sigma()));
    rec.meta.emplace_back("total_resource", fmt(base.total_resource()));
    if (needs_policy) {
        rec.meta.emplace_back("eta", fmt(spec.eta));
        rec.meta.emplace_back("growth_exponent", fmt(spec.growth->exponent));
        rec.meta.emplace_back("growth_depreciation", fmt(spec.growth->depreciation));
        rec.meta.emplace_back("growth_stock", fmt(spec.growth->stock));
        rec.meta.emplace_back("policy_mode",
                              spec.policy_mode == PolicyMode::display ? "display"
                                                                      : "tolerance");
        rec.meta.emplace_back("aggregate", fmt(spec.aggregate));
        if (spec.stock_step) rec.meta.emplace_back("stock_step", fmt(*spec.stock_step));
    }
    rec.meta.emplace_back("grid_points", std::to_string(spec.grid.size()));

    rec.columns.emplace_back(variable_name(spec.variable));
    for (OutputField f : spec.outputs) {
        switch (f) {
            case OutputField::consumption:
                for (Index i = 0; i < base.size(); ++i)
                    rec.columns.push_back("x_" + std::to_string(i + 1));
                break;
            case OutputField::rho_lobby: rec.columns.emplace_back("rho_lobby"); break;
            case OutputField::rho_welfare: rec.columns.emplace_back("rho_welfare"); break;
            case OutputField::rho_policy: rec.columns.emplace_back("rho_policy"); break;
            case OutputField::delta_disagreement:
                rec.columns.emplace_back("delta_disagreement");
                break;
        }
    }

    for (double g : spec.grid) {
        const Scenario at = spec.variable == SweepVariable::theta ? base.at_theta(g)
                                                                  : base.at_time(g);
        Allocation alloc;
        if (needs_alloc) {
            alloc = allocate(at);
            assert_allocation_row(at, alloc);
        }
        double rho_w = 0.0;
        if (needs_welfare) rho_w = rho_welfare(base.weights(), base.rates(), at.time());
        double rho_p = 0.0;
        if (needs_policy) {
            GrowthModel model = *spec.growth;
            if (spec.stock_step)
                model.stock = integrate_stock(
                    *spec.growth, [&](double) { return spec.aggregate; }, g,
                    *spec.stock_step);
            rho_p = rho_policy(base.weights(), base.rates(), spec.eta, model, at.time(),
                               spec.policy_mode, spec.aggregate);
        }

        std::vector<double> row;
        row.push_back(g);
        for (OutputField f : spec.outputs) {
            switch (f) {
                case OutputField::consumption:
                    for (Index i = 0; i < base.size(); ++i)
                        row.push_back(alloc.consumption[i]);
                    break;
                case OutputField::rho_lobby: row.push_back(alloc.equivalent_rate); break;
                case OutputField::rho_welfare: row.push_back(rho_w); break;
                case OutputField::rho_policy: row.push_back(rho_p); break;
                case OutputField::delta_disagreement:
                    row.push_back(alloc.equivalent_rate - rho_w);
                    break;
            }
        }
        rec.rows.push_back(std::move(row));
    }

    for (std::size_t c = 1; c < rec.columns.size(); ++c) {
        std::vector<double> col;
        col.reserve(rec.rows.size());
        for (const auto& row : rec.rows) col.push_back(row[c]);
        rec.summaries.push_back(summarize(rec.columns[c], col));
    }
    validate_record(rec);
    return rec;
}

ExperimentRecord run_monte_carlo(const MonteCarloSpec& spec) {
    const Index n = spec.n_groups;
    if (n < 1) throw std::invalid_argument("montecarlo: n_groups must be at least 1");
    if (spec.replications < 1)
        throw std::invalid_argument("montecarlo: replications must be at least 1");

    Vec weights;
    switch (spec.wealth.kind) {
        case WealthSource::Kind::pareto_weights:
            weights = index_weights(spec.wealth.pareto, n, spec.wealth.sorted_ascending);
            break;
        case WealthSource::Kind::equal:
            weights = Vec::Constant(n, 1.0 / static_cast<double>(n));
            break;
        case WealthSource::Kind::fixed:
            if (static_cast<Index>(spec.wealth.fixed.size()) != n)
                throw std::invalid_argument("montecarlo: fixed wealth size mismatch");
            weights = Eigen::Map<const Vec>(spec.wealth.fixed.data(), n);
            break;
    }
    if (spec.rates.kind == RateSource::Kind::fixed &&
        static_cast<Index>(spec.rates.fixed.size()) != n)
        throw std::invalid_argument("montecarlo: fixed rates size mismatch");

    ExperimentRecord rec;
    rec.meta.emplace_back("experiment", "montecarlo");
    rec.meta.emplace_back("n_groups", std::to_string(n));
    rec.meta.emplace_back("replications", std::to_string(spec.replications));
    rec.meta.emplace_back("seed", std::to_string(spec.seed));
    switch (spec.wealth.kind) {
        case WealthSource::Kind::pareto_weights:
            rec.meta.emplace_back("wealth", "pareto " + fmt(spec.wealth.pareto.shape) +
                                                " " + fmt(spec.wealth.pareto.scale));
            rec.meta.emplace_back("wealth_sorted",
                                  spec.wealth.sorted_ascending ? "ascending" : "none");
            break;
        case WealthSource::Kind::equal: rec.meta.emplace_back("wealth", "equal"); break;
        case WealthSource::Kind::fixed:
            rec.meta.emplace_back("wealth", "fixed " + join(weights));
            break;
    }
    if (spec.rates.kind == RateSource::Kind::gamma_draws) {
        rec.meta.emplace_back("rates", "gamma " + fmt(spec.rates.gamma.shape) + " " +
                                           fmt(spec.rates.gamma.scale));
        rec.meta.emplace_back("rates_normalized", spec.rates.normalize ? "yes" : "no");
    } else {
        rec.meta.emplace_back(
            "rates", "fixed " + join(Eigen::Map<const Vec>(spec.rates.fixed.data(),
                                                           static_cast<Index>(
                                                               spec.rates.fixed.size()))));
    }
    rec.meta.emplace_back("theta", fmt(spec.theta));
    rec.meta.emplace_back("sigma", fmt(spec.sigma));
    rec.meta.emplace_back("total_resource", fmt(spec.total_resource));
    rec.meta.emplace_back("t", fmt(spec.time));

    rec.columns = {"rep", "rho_star"};
    for (Index i = 0; i < n; ++i) rec.columns.push_back("x_" + std::to_string(i + 1));
    for (Index i = 0; i < n; ++i) rec.columns.push_back("rho_" + std::to_string(i + 1));

    std::vector<double> rho_stars;
    std::vector<double> pooled_x, pooled_r;
    for (Index rep = 0; rep < spec.replications; ++rep) {
        SeededSampler gen(SeededSampler::derive_seed(spec.seed,
                                                     static_cast<std::uint64_t>(rep)));
        Vec rates;
        if (spec.rates.kind == RateSource::Kind::gamma_draws) {
            rates = sample(gen, spec.rates.gamma, n);
            if (spec.rates.normalize) rates /= rates.sum();
        } else {
            rates = Eigen::Map<const Vec>(spec.rates.fixed.data(), n);
        }

        std::vector<Group> groups;
        groups.reserve(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i) groups.push_back({weights[i], rates[i]});
        const Scenario s(groups, spec.theta, spec.sigma, spec.total_resource, spec.time);
        const Allocation a = allocate(s);
        assert_allocation_row(s, a);

        std::vector<double> row;
        row.reserve(2 + 2 * static_cast<std::size_t>(n));
        row.push_back(static_cast<double>(rep));
        row.push_back(a.equivalent_rate);
        for (Index i = 0; i < n; ++i) row.push_back(a.consumption[i]);
        for (Index i = 0; i < n; ++i) row.push_back(rates[i]);
        rec.rows.push_back(std::move(row));

        rho_stars.push_back(a.equivalent_rate);
        for (Index i = 0; i < n; ++i) {
            pooled_x.push_back(a.consumption[i]);
            pooled_r.push_back(rates[i]);
        }
    }

    rec.summaries.push_back(summarize("rho_star", rho_stars));
    rec.summaries.push_back(summarize("consumption", pooled_x));
    rec.summaries.push_back(summarize("rate", pooled_r));
    rec.histograms.push_back(freedman_diaconis(
        "consumption",
        Eigen::Map<const Vec>(pooled_x.data(), static_cast<Index>(pooled_x.size()))));
    rec.histograms.push_back(freedman_diaconis(
        "rate",
        Eigen::Map<const Vec>(pooled_r.data(), static_cast<Index>(pooled_r.size()))));
    validate_record(rec);
    return rec;
}

FigureId parse_figure_id(std::string_view name) {
    std::string up(name);
    for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (int i = 0; i < 11; ++i)
        if (up == "F" + std::to_string(i + 1)) return static_cast<FigureId>(i);
    throw std::invalid_argument("unknown figure id: " + std::string(name));
}

std::string figure_name(FigureId id) {
    return "F" + std::to_string(static_cast<int>(id) + 1);
}

namespace {

void prepend_figure_meta(ExperimentRecord& rec, FigureId id, const char* description) {
    std::vector<std::pair<std::string, std::string>> head;
    head.emplace_back("figure", figure_name(id));
    head.emplace_back("description", description);
    rec.meta.insert(rec.meta.begin(), head.begin(), head.end());
}

ExperimentRecord curve_record(const char* xname, const char* yname,
                              const std::vector<double>& xs,
                              const std::function<double(double)>& f) {
    ExperimentRecord rec;
    rec.columns = {xname, yname};
    for (double x : xs) rec.rows.push_back({x, f(x)});
    return rec;
}

Vec normalized_gamma_rates(const GammaSpec& g, Index n, std::uint64_t seed) {
    SeededSampler gen(SeededSampler::derive_seed(seed, 0));
    Vec r = sample(gen, g, n);
    return r / r.sum();
}

}  // namespace

ExperimentRecord reproduce_figure(FigureId id, const FigureOverrides& o) {
    const std::uint64_t seed = o.seed.value_or(42);
    const double sigma = o.sigma.value_or(2.0);
    const double eta = o.eta.value_or(2.0);
    const double w = o.total_resource.value_or(1.0);

    switch (id) {
        case FigureId::F1: {
            ExperimentRecord rec = curve_record(
                "wealth", "pdf", linspace(1.0, 10.0, 200),
                [](double x) { return pareto_pdf({1.0, 1.0}, x); });
            rec.meta.emplace_back("distribution", "pareto 1 1");
            prepend_figure_meta(rec, id, "wealth density curve 1/x^2");
            validate_record(rec);
            return rec;
        }
        case FigureId::F2: {
            const Index n = o.n_groups.value_or(10);
            const Vec weights = index_weights(ParetoSpec{1.0, 1.0}, n, true);
            ExperimentRecord rec;
            rec.columns = {"group", "weight"};
            for (Index i = 0; i < n; ++i)
                rec.rows.push_back({static_cast<double>(i + 1), weights[i]});
            rec.meta.emplace_back("distribution", "pareto 1 1");
            rec.meta.emplace_back("n_groups", std::to_string(n));
            rec.meta.emplace_back("sorted", "ascending");
            prepend_figure_meta(rec, id, "index wealth weights, ascending");
            validate_record(rec);
            return rec;
        }
        case FigureId::F3: {
            const Index n = o.n_groups.value_or(10);
            const Vec weights = index_weights(ParetoSpec{1.0, 1.0}, n, false);
            std::vector<Group> groups;
            for (Index i = 0; i < n; ++i) groups.push_back({weights[i], 0.0});
            SweepSpec sw{Scenario(groups, 0.0, sigma, w, o.time.value_or(0.0))};
            sw.variable = SweepVariable::theta;
            sw.grid = linspace(0.0, 0.99, 100);
            sw.outputs = {OutputField::consumption};
            ExperimentRecord rec = run_sweep(sw);
            rec.meta.emplace_back("wealth", "pareto 1 1");
            prepend_figure_meta(rec, id, "consumption response to theta");
            return rec;
        }
        case FigureId::F4: {
            const Index n = o.n_groups.value_or(25);
            SeededSampler gen(SeededSampler::derive_seed(seed, 0));
            const Vec draws = sample(gen, GammaSpec{4.0, 2.0}, n);
            ExperimentRecord rec;
            rec.columns = {"group", "rate_draw"};
            for (Index i = 0; i < n; ++i)
                rec.rows.push_back({static_cast<double>(i + 1), draws[i]});
            rec.meta.emplace_back("distribution", "gamma 4 2");
            rec.meta.emplace_back("n_groups", std::to_string(n));
            rec.meta.emplace_back("seed", std::to_string(seed));
            rec.summaries.push_back(summarize(
                "rate_draw", std::vector<double>(draws.begin(), draws.end())));
            rec.histograms.push_back(freedman_diaconis("rate_draw", draws));
            prepend_figure_meta(rec, id, "raw discount-rate draws");
            validate_record(rec);
            return rec;
        }
        case FigureId::F5: {
            ExperimentRecord rec = curve_record(
                "rate", "pdf", linspace(0.0, 20.0, 201),
                [](double x) { return gamma_pdf({4.0, 2.0}, x); });
            rec.meta.emplace_back("distribution", "gamma 4 2");
            prepend_figure_meta(rec, id, "discount-rate density curve");
            validate_record(rec);
            return rec;
        }
        case FigureId::F6:
        case FigureId::F7: {
            MonteCarloSpec mc;
            mc.n_groups = o.n_groups.value_or(25);
            mc.wealth.kind = WealthSource::Kind::equal;
            mc.rates.kind = RateSource::Kind::gamma_draws;
            mc.rates.gamma = {4.0, 2.0};
            mc.rates.normalize = true;
            mc.replications = o.replications.value_or(200);
            mc.seed = seed;
            mc.theta = o.theta.value_or(id == FigureId::F6 ? 0.2 : 0.8);
            mc.sigma = sigma;
            mc.total_resource = w;
            mc.time = o.time.value_or(1.0);
            ExperimentRecord rec = run_monte_carlo(mc);
            prepend_figure_meta(rec, id,
                                id == FigureId::F6
                                    ? "consumption distribution, low theta"
                                    : "consumption distribution, high theta");
            return rec;
        }
        case FigureId::F8: {
            const Index n = o.n_groups.value_or(25);
            const Vec rates = normalized_gamma_rates({4.0, 2.0}, n, seed);
            std::vector<Group> groups;
            for (Index i = 0; i < n; ++i)
                groups.push_back({1.0 / static_cast<double>(n), rates[i]});
            SweepSpec sw{Scenario(groups, 0.0, sigma, w, o.time.value_or(1.0))};
            sw.variable = SweepVariable::theta;
            sw.grid = linspace(0.0, 0.99, 100);
            sw.outputs = {OutputField::consumption};
            ExperimentRecord rec = run_sweep(sw);
            rec.meta.emplace_back("rates_source", "gamma 4 2 normalized");
            rec.meta.emplace_back("seed", std::to_string(seed));
            prepend_figure_meta(rec, id, "lobbying-group consumption vs theta");
            return rec;
        }
        case FigureId::F9: {
            SweepSpec sw{Scenario(figure_reference_groups(), 0.0, sigma, w,
                                  o.time.value_or(1.0))};
            sw.variable = SweepVariable::theta;
            sw.grid = linspace(0.0, 0.99, 100);
            sw.outputs = {OutputField::rho_lobby, OutputField::rho_welfare};
            ExperimentRecord rec = run_sweep(sw);
            prepend_figure_meta(rec, id, "blended vs welfare-equivalent rate over theta");
            return rec;
        }
        case FigureId::F10: {
            const Scenario base(figure_reference_groups(), 0.0, sigma, w, 0.0);
            const std::vector<double> thetas = {0.2, 0.5, 0.8};
            ExperimentRecord rec;
            rec.meta.emplace_back("experiment", "sweep");
            rec.meta.emplace_back("variable", "t");
            rec.meta.emplace_back("n_groups", std::to_string(base.size()));
            rec.meta.emplace_back("weights", join(base.weights()));
            rec.meta.emplace_back("rates", join(base.rates()));
            rec.meta.emplace_back("sigma", fmt(sigma));
            rec.meta.emplace_back("total_resource", fmt(w));
            rec.meta.emplace_back("thetas", "0.2 0.5 0.8");
            rec.columns = {"t"};
            for (double th : thetas) {
                std::string name = "rho_lobby_theta_" + label(th);
                rec.columns.push_back(std::move(name));
            }
            rec.columns.emplace_back("rho_welfare");
            for (double t : linspace(0.0, 100.0, 101)) {
                std::vector<double> row{t};
                for (double th : thetas) {
                    const Allocation a = allocate(base.at_theta(th).at_time(t));
                    row.push_back(a.equivalent_rate);
                }
                row.push_back(rho_welfare(base.weights(), base.rates(), t));
                rec.rows.push_back(std::move(row));
            }
            for (std::size_t c = 1; c < rec.columns.size(); ++c) {
                std::vector<double> col;
                for (const auto& row : rec.rows) col.push_back(row[c]);
                rec.summaries.push_back(summarize(rec.columns[c], col));
            }
            prepend_figure_meta(rec, id, "rate paths over time per theta");
            validate_record(rec);
            return rec;
        }
        case FigureId::F11: {
            SweepSpec sw{Scenario(figure_reference_groups(), o.theta.value_or(0.2),
                                  sigma, w, 0.0)};
            sw.variable = SweepVariable::time;
            sw.grid = linspace(0.0, 100.0, 101);
            sw.outputs = {OutputField::rho_policy, OutputField::rho_welfare};
            sw.eta = eta;
            sw.growth = o.growth.value_or(GrowthModel{0.3, 0.05, 1.0});
            sw.policy_mode = o.policy_mode.value_or(PolicyMode::display);
            sw.aggregate = 1.0;
            sw.stock_step = o.stock_step;
            ExperimentRecord rec = run_sweep(sw);
            prepend_figure_meta(rec, id, "policy vs welfare-equivalent rate over time");
            return rec;
        }
    }
    throw std::invalid_argument("unknown figure id");
}

}  // namespace sdr
