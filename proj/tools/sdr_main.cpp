#include "sdr/allocation.hpp"
#include "sdr/config.hpp"
#include "sdr/oracle.hpp"
#include "sdr/rates.hpp"
#include "sdr/record_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace sdr;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join(const Eigen::Ref<const Vec>& v) {
    std::string out;
    for (Index i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += fmt(v[i]);
    }
    return out;
}

void push_scenario_meta(ExperimentRecord& rec, const Scenario& s) {
    rec.meta.emplace_back("n_groups", std::to_string(s.size()));
    rec.meta.emplace_back("weights", join(s.weights()));
    rec.meta.emplace_back("rates", join(s.rates()));
    rec.meta.emplace_back("theta", fmt(s.theta()));
    rec.meta.emplace_back("sigma", fmt(s.sigma()));
    rec.meta.emplace_back("total_resource", fmt(s.total_resource()));
    rec.meta.emplace_back("t", fmt(s.time()));
}

ExperimentRecord allocate_record(const Scenario& s) {
    const Allocation a = allocate(s);
    ExperimentRecord rec;
    push_scenario_meta(rec, s);
    rec.meta.emplace_back("u_star", fmt(equivalent_utility(s.total_resource(),
                                                           a.equivalent_rate, s.time(),
                                                           s.sigma())));
    rec.meta.emplace_back("min_utility_at_favored",
                          a.min_utility_at_favored ? "true" : "false");
    rec.columns = {"group", "weight", "rho", "x", "rho_star"};
    for (Index i = 0; i < s.size(); ++i)
        rec.rows.push_back({static_cast<double>(i + 1), s.weights()[i], s.rates()[i],
                            a.consumption[i], a.equivalent_rate});
    return rec;
}

std::pair<ExperimentRecord, int> oracle_record(const Scenario& s, double resolution) {
    const ValidationReport report = validate_closed_form(s, resolution);
    ExperimentRecord rec;
    push_scenario_meta(rec, s);
    rec.meta.emplace_back("requested_resolution", fmt(resolution));
    rec.meta.emplace_back("grid_resolution", fmt(report.oracle.grid_resolution));
    rec.meta.emplace_back("evaluations", std::to_string(report.oracle.iterations));
    rec.meta.emplace_back("max_abs_gap", fmt(report.max_abs_gap));
    rec.meta.emplace_back("welfare_gap", fmt(report.welfare_gap));
    rec.meta.emplace_back("closed_form_valid",
                          report.closed_form_valid ? "true" : "false");
    rec.meta.emplace_back("flag_agrees", report.flag_agrees ? "true" : "false");
    rec.columns = {"group", "x_closed", "x_oracle", "abs_gap"};
    for (Index i = 0; i < s.size(); ++i)
        rec.rows.push_back({static_cast<double>(i + 1), report.closed_form[i],
                            report.oracle.argmax[i],
                            std::abs(report.closed_form[i] - report.oracle.argmax[i])});
    const bool within = report.max_abs_gap <= 2.0 * report.oracle.grid_resolution &&
                        std::abs(report.welfare_gap) <= 1e-6;
    return {std::move(rec), within ? 0 : 3};
}

ExperimentRecord compare_record(const Config& cfg, const Scenario& s) {
    const GrowthModel model = growth_model_from_config(cfg);
    const double eta = cfg.scenario.eta.value_or(1.0);
    if (!(std::isfinite(eta) && eta > 0.0)) throw ConfigError(0, "eta: must be positive");
    const PolicyMode mode = cfg.experiment.mode.value_or(PolicyMode::tolerance);
    const double aggregate = cfg.experiment.aggregate.value_or(1.0);
    if (!(std::isfinite(aggregate) && aggregate > 0.0))
        throw ConfigError(0, "aggregate: must be positive");

    const RateComparison rc = compare_rates(s, eta, model, s.time(), mode, aggregate);
    ExperimentRecord rec;
    push_scenario_meta(rec, s);
    rec.meta.emplace_back("eta", fmt(eta));
    rec.meta.emplace_back("growth_exponent", fmt(model.exponent));
    rec.meta.emplace_back("growth_depreciation", fmt(model.depreciation));
    rec.meta.emplace_back("growth_stock", fmt(model.stock));
    rec.meta.emplace_back("policy_mode",
                          mode == PolicyMode::display ? "display" : "tolerance");
    rec.meta.emplace_back("aggregate", fmt(aggregate));
    rec.columns = {"t", "rho_lobby", "rho_welfare", "rho_policy", "delta_disagreement"};
    rec.rows.push_back(
        {rc.t, rc.rho_lobby, rc.rho_welfare, rc.rho_policy, rc.delta_disagreement});
    return rec;
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError(0, "cannot write output file '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planner allocations and discount-rate comparisons for lobbying groups"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format_flag;
    std::string figure_arg;
    std::optional<std::uint64_t> seed_flag;
    std::optional<int> precision_flag;

    app.add_option("--config", config_path, "configuration file");
    app.add_option("--seed", seed_flag, "sampling seed (overrides the config)");
    app.add_option("--format", format_flag, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--precision", precision_flag, "significant digits")
        ->check(CLI::Range(1, 17));

    CLI::App* c_allocate =
        app.add_subcommand("allocate", "closed-form consumption split");
    CLI::App* c_sweep = app.add_subcommand("sweep", "grid sweep over theta or time");
    CLI::App* c_mc = app.add_subcommand("montecarlo", "replicated sampled scenarios");
    CLI::App* c_figure = app.add_subcommand("figure", "canned figure experiment");
    c_figure->add_option("id", figure_arg, "figure id (F1..F11)");
    CLI::App* c_oracle =
        app.add_subcommand("oracle-check", "closed form vs numeric maximizer");
    CLI::App* c_rates =
        app.add_subcommand("compare-rates", "blended, welfare and policy rates");
    for (CLI::App* sub : {c_allocate, c_sweep, c_mc, c_figure, c_oracle, c_rates})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Config cfg =
            config_path.empty() ? Config{} : parse_config_file(config_path);
        const std::optional<std::uint64_t> seed_opt =
            seed_flag ? seed_flag : cfg.experiment.seed;
        const std::uint64_t seed = seed_opt.value_or(0);
        OutputFormat format = cfg.output.format.value_or(OutputFormat::csv);
        if (!format_flag.empty())
            format = format_flag == "json" ? OutputFormat::json : OutputFormat::csv;
        const int precision =
            precision_flag ? *precision_flag : cfg.output.precision.value_or(12);
        const std::string path = !out_path.empty() ? out_path
                                                   : cfg.output.path.value_or("");

        ExperimentRecord rec;
        std::string command;
        int code = 0;
        if (c_allocate->parsed()) {
            command = "allocate";
            rec = allocate_record(scenario_from_config(cfg, seed));
        } else if (c_sweep->parsed()) {
            command = "sweep";
            rec = run_sweep(sweep_from_config(cfg, seed));
        } else if (c_mc->parsed()) {
            command = "montecarlo";
            rec = run_monte_carlo(monte_carlo_from_config(cfg, seed));
        } else if (c_figure->parsed()) {
            command = "figure";
            const std::string id_text =
                !figure_arg.empty() ? figure_arg : cfg.experiment.figure.value_or("");
            if (id_text.empty())
                throw ConfigError(0, "figure: id required (argument or config)");
            FigureId id;
            try {
                id = parse_figure_id(id_text);
            } catch (const std::invalid_argument&) {
                throw ConfigError(0, "figure: unknown id '" + id_text + "'");
            }
            rec = reproduce_figure(id, overrides_from_config(cfg, seed_opt));
        } else if (c_oracle->parsed()) {
            command = "oracle-check";
            auto [report, exit_code] = oracle_record(
                scenario_from_config(cfg, seed),
                cfg.experiment.resolution.value_or(0.01));
            rec = std::move(report);
            code = exit_code;
        } else {
            command = "compare-rates";
            rec = compare_record(cfg, scenario_from_config(cfg, seed));
        }
        rec.meta.insert(rec.meta.begin(), {"command", command});

        const std::string text = format == OutputFormat::csv ? to_csv(rec, precision)
                                                             : to_json(rec, precision);
        write_text(text, path);
        return code;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
