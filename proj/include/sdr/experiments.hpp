#pragma once

#include "sdr/distributions.hpp"
#include "sdr/rates.hpp"
#include "sdr/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdr {

enum class SweepVariable { theta, time };

enum class OutputField { consumption, rho_lobby, rho_welfare, rho_policy, delta_disagreement };

// Grid evaluation of the allocation and rate machinery over theta or time.
// grid must be nonempty, strictly increasing and inside the variable's
// domain ([0, 1] for theta, [0, inf) for time). outputs are emitted in the
// order given; rho_policy requires a growth model. When stock_step is set
// on a time sweep, the stock evolves from t = 0 under
// dS/dt = F(S) - aggregate instead of staying fixed.
struct SweepSpec {
    explicit SweepSpec(Scenario base_scenario) : base(std::move(base_scenario)) {}

    Scenario base;
    SweepVariable variable = SweepVariable::theta;
    std::vector<double> grid;
    std::vector<OutputField> outputs;
    double eta = 1.0;
    std::optional<GrowthModel> growth;
    PolicyMode policy_mode = PolicyMode::tolerance;
    double aggregate = 1.0;
    std::optional<double> stock_step;
};

struct WealthSource {
    enum class Kind { pareto_weights, equal, fixed };
    Kind kind = Kind::equal;
    ParetoSpec pareto{};
    bool sorted_ascending = false;
    std::vector<double> fixed;

    friend bool operator==(const WealthSource&, const WealthSource&) = default;
};

// Gamma rate draws are normalized to sum one by default so they land inside
// the admissible rate range whatever the shape and scale; turn normalize
// off only for rate specs that already fit in [0, 1].
struct RateSource {
    enum class Kind { gamma_draws, fixed };
    Kind kind = Kind::fixed;
    GammaSpec gamma{};
    bool normalize = true;
    std::vector<double> fixed;

    friend bool operator==(const RateSource&, const RateSource&) = default;
};

struct MonteCarloSpec {
    Index n_groups = 1;
    WealthSource wealth;
    RateSource rates;
    Index replications = 1;
    std::uint64_t seed = 0;
    double theta = 0.0;
    double sigma = 2.0;
    double total_resource = 1.0;
    double time = 0.0;
};

struct Histogram {
    std::string name;
    std::vector<double> edges;        // bin count + 1 ascending edges
    std::vector<std::int64_t> counts; // last bin closed on the right
};

struct ColumnSummary {
    std::string name;
    double mean = 0.0;
    double stddev = 0.0;
};

// Self-describing result table: every experiment echoes its full parameter
// set in meta so outputs stand alone.
struct ExperimentRecord {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<ColumnSummary> summaries;
    std::vector<Histogram> histograms;
};

// Throws when a record violates its structural invariants (column/row shape
// agreement, finite values).
void validate_record(const ExperimentRecord& rec);

// Equal-mass quartile binning by the Freedman-Diaconis rule; a degenerate
// spread collapses to a single bin.
Histogram freedman_diaconis(std::string name, const Eigen::Ref<const Vec>& values);

ExperimentRecord run_sweep(const SweepSpec& spec);

// One row per replication: replication index, blended rate, consumption and
// the rates actually used. Replication k draws from the child stream
// derive_seed(seed, k), so records are reproducible and order-independent.
ExperimentRecord run_monte_carlo(const MonteCarloSpec& spec);

enum class FigureId { F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11 };

// Accepts "F1".."F11" (case-insensitive); anything else throws.
FigureId parse_figure_id(std::string_view name);
std::string figure_name(FigureId id);

// Optional parameter replacements for the canned figure specs.
struct FigureOverrides {
    std::optional<Index> n_groups;
    std::optional<double> theta;
    std::optional<double> sigma;
    std::optional<double> eta;
    std::optional<double> time;
    std::optional<double> total_resource;
    std::optional<std::uint64_t> seed;
    std::optional<Index> replications;
    std::optional<GrowthModel> growth;
    std::optional<double> stock_step;
    std::optional<PolicyMode> policy_mode;
};

// Canned experiment behind each figure id; parameters the id does not pin
// down are explicit defaults echoed in the record meta. See README for the
// full map.
ExperimentRecord reproduce_figure(FigureId id, const FigureOverrides& overrides = {});

}  // namespace sdr
