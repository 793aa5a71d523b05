#pragma once

#include "sdr/experiments.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdr {

// Parse or construction failure. what() names the offending key or section;
// line is 1-based and 0 when the problem is not tied to a single line.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(int line, const std::string& message);

    int line() const { return line_; }

  private:
    int line_;
};

struct GroupEntry {
    double weight = 0.0;
    double rate = 0.0;

    friend bool operator==(const GroupEntry&, const GroupEntry&) = default;
};

// [scenario] block. Either explicit `group = <weight> <rate>` lines or
// wealth/rates sources plus a group count; mixing the two is rejected.
struct ScenarioConfig {
    std::vector<GroupEntry> groups;
    std::optional<Index> n_groups;
    std::optional<WealthSource> wealth;
    std::optional<RateSource> rates;
    std::optional<double> theta;
    std::optional<double> sigma;
    std::optional<double> eta;
    std::optional<double> total_resource;  // key: w
    std::optional<double> time;            // key: t

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// [growth] block; gamma, delta and S0 are all required once the block
// appears. step switches time sweeps from a fixed stock to an integrated
// stock path.
struct GrowthConfig {
    double exponent = 0.0;
    double depreciation = 0.0;
    double stock = 0.0;
    std::optional<double> step;

    friend bool operator==(const GrowthConfig&, const GrowthConfig&) = default;
};

struct ExperimentConfig {
    std::optional<SweepVariable> variable;
    std::vector<double> grid;
    std::vector<OutputField> outputs;
    std::optional<Index> replications;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> figure;
    std::optional<double> resolution;
    std::optional<PolicyMode> mode;
    std::optional<double> aggregate;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

enum class OutputFormat { csv, json };

struct OutputConfig {
    std::optional<OutputFormat> format;
    std::optional<std::string> path;
    std::optional<int> precision;

    friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct Config {
    ScenarioConfig scenario;
    std::optional<GrowthConfig> growth;
    ExperimentConfig experiment;
    OutputConfig output;

    friend bool operator==(const Config&, const Config&) = default;
};

// Parses the key-value grammar documented in the README. Unknown sections,
// unknown keys, duplicate keys and malformed values all throw ConfigError
// anchored to the offending line.
Config parse_config_text(std::string_view text);
Config parse_config_file(const std::string& path);

// Canonical text form: parse_config_text(echo_config(c)) == c.
std::string echo_config(const Config& config);

// Resolves the scenario block into one concrete Scenario. Wealth sources
// resolve deterministically (pareto index weights, equal split, fixed
// vector); a gamma rate source draws one vector from the child stream
// derive_seed(seed, 0). Missing or out-of-range entries throw ConfigError.
Scenario scenario_from_config(const Config& config, std::uint64_t seed);

SweepSpec sweep_from_config(const Config& config, std::uint64_t seed);
MonteCarloSpec monte_carlo_from_config(const Config& config, std::uint64_t seed);

// Growth block as a model; throws ConfigError when the block is missing or
// out of range.
GrowthModel growth_model_from_config(const Config& config);

// Figure parameter replacements from whatever the config pins down; seed is
// the already-resolved command-line/config seed, empty when neither gave one.
FigureOverrides overrides_from_config(const Config& config,
                                      std::optional<std::uint64_t> seed);

}  // namespace sdr
