#include "sdr/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace sdr {

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error(line > 0
                             ? "config line " + std::to_string(line) + ": " + message
                             : "config: " + message),
      line_(line) {}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double to_double(const std::string& tok, int line, const std::string& key) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ConfigError(line, key + ": '" + tok + "' is not a number");
    return v;
}

std::uint64_t to_u64(const std::string& tok, int line, const std::string& key) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ConfigError(line, key + ": '" + tok + "' is not an unsigned integer");
    return v;
}

Index to_count(const std::string& tok, int line, const std::string& key) {
    const std::uint64_t v = to_u64(tok, line, key);
    if (v == 0 || v > (1u << 30))
        throw ConfigError(line, key + ": must be a positive count");
    return static_cast<Index>(v);
}

double single_double(const std::vector<std::string>& toks, int line,
                     const std::string& key) {
    if (toks.size() != 1)
        throw ConfigError(line, key + ": expected exactly one number");
    return to_double(toks[0], line, key);
}

std::vector<double> expand_grid(const std::string& value, int line) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : value) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw ConfigError(line, "grid: expected '<start>:<stop>:<step>'");
    const double a = to_double(std::string(trim(parts[0])), line, "grid");
    const double b = to_double(std::string(trim(parts[1])), line, "grid");
    const double step = to_double(std::string(trim(parts[2])), line, "grid");
    if (!(step > 0.0)) throw ConfigError(line, "grid: step must be positive");
    if (b < a) throw ConfigError(line, "grid: range must ascend");
    const double count = (b - a) / step;
    if (count > 1e7) throw ConfigError(line, "grid: too many points");
    const auto kmax = static_cast<long long>(std::floor(count + 1e-6));
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(kmax) + 1);
    for (long long k = 0; k <= kmax; ++k) {
        double v = a + static_cast<double>(k) * step;
        if (k == kmax && std::abs(v - b) <= 1e-6 * step) v = b;
        g.push_back(v);
    }
    return g;
}

WealthSource parse_wealth(const std::vector<std::string>& toks, int line) {
    if (toks.empty()) throw ConfigError(line, "wealth: empty value");
    WealthSource w;
    if (toks[0] == "pareto") {
        w.kind = WealthSource::Kind::pareto_weights;
        if (toks.size() < 3 || toks.size() > 4)
            throw ConfigError(line, "wealth: expected 'pareto <shape> <scale> [ascending]'");
        w.pareto.shape = to_double(toks[1], line, "wealth");
        w.pareto.scale = to_double(toks[2], line, "wealth");
        if (toks.size() == 4) {
            if (toks[3] != "ascending")
                throw ConfigError(line, "wealth: unknown modifier '" + toks[3] + "'");
            w.sorted_ascending = true;
        }
    } else if (toks[0] == "equal") {
        if (toks.size() != 1) throw ConfigError(line, "wealth: 'equal' takes no arguments");
        w.kind = WealthSource::Kind::equal;
    } else if (toks[0] == "fixed") {
        if (toks.size() < 2)
            throw ConfigError(line, "wealth: expected 'fixed <w1> <w2> ...'");
        w.kind = WealthSource::Kind::fixed;
        for (std::size_t i = 1; i < toks.size(); ++i)
            w.fixed.push_back(to_double(toks[i], line, "wealth"));
    } else {
        throw ConfigError(line, "wealth: unknown source '" + toks[0] + "'");
    }
    return w;
}

RateSource parse_rates(const std::vector<std::string>& toks, int line) {
    if (toks.empty()) throw ConfigError(line, "rates: empty value");
    RateSource r;
    if (toks[0] == "gamma") {
        r.kind = RateSource::Kind::gamma_draws;
        if (toks.size() < 3 || toks.size() > 4)
            throw ConfigError(line, "rates: expected 'gamma <shape> <scale> [raw]'");
        r.gamma.shape = to_double(toks[1], line, "rates");
        r.gamma.scale = to_double(toks[2], line, "rates");
        if (toks.size() == 4) {
            if (toks[3] != "raw")
                throw ConfigError(line, "rates: unknown modifier '" + toks[3] + "'");
            r.normalize = false;
        }
    } else if (toks[0] == "fixed") {
        if (toks.size() < 2)
            throw ConfigError(line, "rates: expected 'fixed <r1> <r2> ...'");
        r.kind = RateSource::Kind::fixed;
        for (std::size_t i = 1; i < toks.size(); ++i)
            r.fixed.push_back(to_double(toks[i], line, "rates"));
    } else {
        throw ConfigError(line, "rates: unknown source '" + toks[0] + "'");
    }
    return r;
}

OutputField parse_output_field(const std::string& tok, int line) {
    if (tok == "consumption") return OutputField::consumption;
    if (tok == "rho_lobby") return OutputField::rho_lobby;
    if (tok == "rho_welfare") return OutputField::rho_welfare;
    if (tok == "rho_policy") return OutputField::rho_policy;
    if (tok == "delta_disagreement") return OutputField::delta_disagreement;
    throw ConfigError(line, "outputs: unknown field '" + tok + "'");
}

enum class Section { none, scenario, growth, experiment, output };

}  // namespace

Config parse_config_text(std::string_view text) {
    Config cfg;
    Section section = Section::none;
    std::set<std::string> seen_sections;
    std::set<std::string> seen_keys;
    bool growth_present = false;
    int growth_line = 0;
    std::set<std::string> growth_keys;

    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(lineno, "malformed section header");
            const std::string name(trim(line.substr(1, line.size() - 2)));
            if (!seen_sections.insert(name).second)
                throw ConfigError(lineno, "duplicate section [" + name + "]");
            if (name == "scenario") {
                section = Section::scenario;
            } else if (name == "growth") {
                section = Section::growth;
                growth_present = true;
                growth_line = lineno;
            } else if (name == "experiment") {
                section = Section::experiment;
            } else if (name == "output") {
                section = Section::output;
            } else {
                throw ConfigError(lineno, "unknown section [" + name + "]");
            }
            continue;
        }
        if (section == Section::none)
            throw ConfigError(lineno, "entry outside any section");

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(lineno, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ConfigError(lineno, "missing key before '='");
        if (value.empty()) throw ConfigError(lineno, key + ": empty value");
        if (key != "group" && !seen_keys.insert(key).second)
            throw ConfigError(lineno, "duplicate key '" + key + "'");
        const std::vector<std::string> toks = split_tokens(value);

        ScenarioConfig& s = cfg.scenario;
        switch (section) {
            case Section::scenario: {
                const bool sourced =
                    s.n_groups || s.wealth || s.rates;
                if (key == "group") {
                    if (sourced)
                        throw ConfigError(
                            lineno, "group: cannot mix explicit groups with sources");
                    if (toks.size() != 2)
                        throw ConfigError(lineno, "group: expected '<weight> <rate>'");
                    s.groups.push_back({to_double(toks[0], lineno, "group"),
                                        to_double(toks[1], lineno, "group")});
                } else if (key == "n" || key == "wealth" || key == "rates") {
                    if (!s.groups.empty())
                        throw ConfigError(
                            lineno, key + ": cannot mix sources with explicit groups");
                    if (key == "n")
                        s.n_groups = to_count(toks.size() == 1 ? toks[0] : "", lineno, "n");
                    else if (key == "wealth")
                        s.wealth = parse_wealth(toks, lineno);
                    else
                        s.rates = parse_rates(toks, lineno);
                } else if (key == "theta") {
                    s.theta = single_double(toks, lineno, key);
                } else if (key == "sigma") {
                    s.sigma = single_double(toks, lineno, key);
                } else if (key == "eta") {
                    s.eta = single_double(toks, lineno, key);
                } else if (key == "w") {
                    s.total_resource = single_double(toks, lineno, key);
                } else if (key == "t") {
                    s.time = single_double(toks, lineno, key);
                } else {
                    throw ConfigError(lineno, "unknown key '" + key + "' in [scenario]");
                }
                break;
            }
            case Section::growth: {
                if (!cfg.growth) cfg.growth.emplace();
                growth_keys.insert(key);
                if (key == "gamma")
                    cfg.growth->exponent = single_double(toks, lineno, key);
                else if (key == "delta")
                    cfg.growth->depreciation = single_double(toks, lineno, key);
                else if (key == "S0")
                    cfg.growth->stock = single_double(toks, lineno, key);
                else if (key == "step")
                    cfg.growth->step = single_double(toks, lineno, key);
                else
                    throw ConfigError(lineno, "unknown key '" + key + "' in [growth]");
                break;
            }
            case Section::experiment: {
                ExperimentConfig& e = cfg.experiment;
                if (key == "variable") {
                    if (value == "theta")
                        e.variable = SweepVariable::theta;
                    else if (value == "t")
                        e.variable = SweepVariable::time;
                    else
                        throw ConfigError(lineno,
                                          "variable: expected 'theta' or 't', got '" +
                                              value + "'");
                } else if (key == "grid") {
                    if (value.find(':') != std::string::npos) {
                        e.grid = expand_grid(value, lineno);
                    } else {
                        for (const std::string& tok : toks)
                            e.grid.push_back(to_double(tok, lineno, "grid"));
                    }
                } else if (key == "outputs") {
                    for (const std::string& tok : toks)
                        e.outputs.push_back(parse_output_field(tok, lineno));
                } else if (key == "replications") {
                    e.replications =
                        to_count(toks.size() == 1 ? toks[0] : "", lineno, key);
                } else if (key == "seed") {
                    if (toks.size() != 1)
                        throw ConfigError(lineno, "seed: expected one integer");
                    e.seed = to_u64(toks[0], lineno, key);
                } else if (key == "figure") {
                    if (toks.size() != 1)
                        throw ConfigError(lineno, "figure: expected one id");
                    try {
                        e.figure = figure_name(parse_figure_id(toks[0]));
                    } catch (const std::invalid_argument&) {
                        throw ConfigError(lineno,
                                          "figure: unknown id '" + toks[0] + "'");
                    }
                } else if (key == "resolution") {
                    e.resolution = single_double(toks, lineno, key);
                    if (!(*e.resolution > 0.0))
                        throw ConfigError(lineno, "resolution: must be positive");
                } else if (key == "mode") {
                    if (value == "display")
                        e.mode = PolicyMode::display;
                    else if (value == "tolerance")
                        e.mode = PolicyMode::tolerance;
                    else
                        throw ConfigError(
                            lineno, "mode: expected 'display' or 'tolerance', got '" +
                                        value + "'");
                } else if (key == "aggregate") {
                    e.aggregate = single_double(toks, lineno, key);
                } else {
                    throw ConfigError(lineno,
                                      "unknown key '" + key + "' in [experiment]");
                }
                break;
            }
            case Section::output: {
                OutputConfig& o = cfg.output;
                if (key == "format") {
                    if (value == "csv")
                        o.format = OutputFormat::csv;
                    else if (value == "json")
                        o.format = OutputFormat::json;
                    else
                        throw ConfigError(lineno,
                                          "format: expected 'csv' or 'json', got '" +
                                              value + "'");
                } else if (key == "path") {
                    o.path = value;
                } else if (key == "precision") {
                    const std::uint64_t p = to_u64(toks.size() == 1 ? toks[0] : "",
                                                   lineno, key);
                    if (p < 1 || p > 17)
                        throw ConfigError(lineno, "precision: must lie in [1, 17]");
                    o.precision = static_cast<int>(p);
                } else {
                    throw ConfigError(lineno, "unknown key '" + key + "' in [output]");
                }
                break;
            }
            case Section::none: break;
        }
    }

    if (growth_present)
        for (const char* k : {"gamma", "delta", "S0"})
            if (!growth_keys.count(k))
                throw ConfigError(growth_line,
                                  std::string("growth block requires '") + k + "'");
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(0, "cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string echo_config(const Config& config) {
    std::ostringstream out;
    const ScenarioConfig& s = config.scenario;
    const bool scenario_any = !s.groups.empty() || s.n_groups || s.wealth || s.rates ||
                              s.theta || s.sigma || s.eta || s.total_resource || s.time;
    if (scenario_any) {
        out << "[scenario]\n";
        for (const GroupEntry& g : s.groups)
            out << "group = " << fmt(g.weight) << ' ' << fmt(g.rate) << '\n';
        if (s.n_groups) out << "n = " << *s.n_groups << '\n';
        if (s.wealth) {
            out << "wealth = ";
            switch (s.wealth->kind) {
                case WealthSource::Kind::pareto_weights:
                    out << "pareto " << fmt(s.wealth->pareto.shape) << ' '
                        << fmt(s.wealth->pareto.scale);
                    if (s.wealth->sorted_ascending) out << " ascending";
                    break;
                case WealthSource::Kind::equal: out << "equal"; break;
                case WealthSource::Kind::fixed:
                    out << "fixed";
                    for (double v : s.wealth->fixed) out << ' ' << fmt(v);
                    break;
            }
            out << '\n';
        }
        if (s.rates) {
            out << "rates = ";
            if (s.rates->kind == RateSource::Kind::gamma_draws) {
                out << "gamma " << fmt(s.rates->gamma.shape) << ' '
                    << fmt(s.rates->gamma.scale);
                if (!s.rates->normalize) out << " raw";
            } else {
                out << "fixed";
                for (double v : s.rates->fixed) out << ' ' << fmt(v);
            }
            out << '\n';
        }
        if (s.theta) out << "theta = " << fmt(*s.theta) << '\n';
        if (s.sigma) out << "sigma = " << fmt(*s.sigma) << '\n';
        if (s.eta) out << "eta = " << fmt(*s.eta) << '\n';
        if (s.total_resource) out << "w = " << fmt(*s.total_resource) << '\n';
        if (s.time) out << "t = " << fmt(*s.time) << '\n';
    }
    if (config.growth) {
        const GrowthConfig& g = *config.growth;
        out << "[growth]\n";
        out << "gamma = " << fmt(g.exponent) << '\n';
        out << "delta = " << fmt(g.depreciation) << '\n';
        out << "S0 = " << fmt(g.stock) << '\n';
        if (g.step) out << "step = " << fmt(*g.step) << '\n';
    }
    const ExperimentConfig& e = config.experiment;
    const bool experiment_any = e.variable || !e.grid.empty() || !e.outputs.empty() ||
                                e.replications || e.seed || e.figure || e.resolution ||
                                e.mode || e.aggregate;
    if (experiment_any) {
        out << "[experiment]\n";
        if (e.variable)
            out << "variable = "
                << (*e.variable == SweepVariable::theta ? "theta" : "t") << '\n';
        if (!e.grid.empty()) {
            out << "grid =";
            for (double v : e.grid) out << ' ' << fmt(v);
            out << '\n';
        }
        if (!e.outputs.empty()) {
            out << "outputs =";
            for (OutputField f : e.outputs) {
                switch (f) {
                    case OutputField::consumption: out << " consumption"; break;
                    case OutputField::rho_lobby: out << " rho_lobby"; break;
                    case OutputField::rho_welfare: out << " rho_welfare"; break;
                    case OutputField::rho_policy: out << " rho_policy"; break;
                    case OutputField::delta_disagreement:
                        out << " delta_disagreement";
                        break;
                }
            }
            out << '\n';
        }
        if (e.replications) out << "replications = " << *e.replications << '\n';
        if (e.seed) out << "seed = " << *e.seed << '\n';
        if (e.figure) out << "figure = " << *e.figure << '\n';
        if (e.resolution) out << "resolution = " << fmt(*e.resolution) << '\n';
        if (e.mode)
            out << "mode = "
                << (*e.mode == PolicyMode::display ? "display" : "tolerance") << '\n';
        if (e.aggregate) out << "aggregate = " << fmt(*e.aggregate) << '\n';
    }
    const OutputConfig& o = config.output;
    if (o.format || o.path || o.precision) {
        out << "[output]\n";
        if (o.format)
            out << "format = " << (*o.format == OutputFormat::csv ? "csv" : "json")
                << '\n';
        if (o.path) out << "path = " << *o.path << '\n';
        if (o.precision) out << "precision = " << *o.precision << '\n';
    }
    return out.str();
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(0, message);
}

void check_theta(double theta) {
    require(std::isfinite(theta) && theta >= 0.0 && theta <= 1.0,
            "theta: must lie in [0, 1]");
}

void check_sigma(double sigma) {
    require(std::isfinite(sigma) && sigma > 0.0, "sigma: must be positive");
}

GrowthModel growth_from(const GrowthConfig& g) {
    require(std::isfinite(g.exponent) && g.exponent > 0.0 && g.exponent < 1.0,
            "gamma: must lie in (0, 1)");
    require(std::isfinite(g.depreciation) && g.depreciation >= 0.0,
            "delta: must be nonnegative");
    require(std::isfinite(g.stock) && g.stock > 0.0, "S0: must be positive");
    if (g.step) require(std::isfinite(*g.step) && *g.step > 0.0, "step: must be positive");
    return {g.exponent, g.depreciation, g.stock};
}

struct CoreParams {
    double theta;
    double sigma;
    double total_resource;
    double time;
};

CoreParams core_params(const ScenarioConfig& s) {
    require(s.theta.has_value(), "theta: required");
    require(s.sigma.has_value(), "sigma: required");
    check_theta(*s.theta);
    check_sigma(*s.sigma);
    const double w = s.total_resource.value_or(1.0);
    require(std::isfinite(w) && w > 0.0, "w: must be positive");
    const double t = s.time.value_or(0.0);
    require(std::isfinite(t) && t >= 0.0, "t: must be nonnegative");
    return {*s.theta, *s.sigma, w, t};
}

struct ResolvedSources {
    Index n = 0;
    WealthSource wealth;
    RateSource rates;
};

ResolvedSources resolve_sources(const ScenarioConfig& s) {
    ResolvedSources r;
    require(s.rates.has_value(), "rates: required when no explicit groups are given");
    r.rates = *s.rates;
    r.wealth = s.wealth.value_or(WealthSource{});

    std::optional<Index> n = s.n_groups;
    const auto take = [&](std::size_t size, const char* key) {
        const auto candidate = static_cast<Index>(size);
        if (n && *n != candidate)
            throw ConfigError(0, std::string(key) + ": size disagrees with n");
        n = candidate;
    };
    if (r.wealth.kind == WealthSource::Kind::fixed) take(r.wealth.fixed.size(), "wealth");
    if (r.rates.kind == RateSource::Kind::fixed) take(r.rates.fixed.size(), "rates");
    require(n.has_value(), "n: required with sampled wealth and rate sources");
    r.n = *n;

    if (r.wealth.kind == WealthSource::Kind::fixed)
        for (double v : r.wealth.fixed)
            require(std::isfinite(v) && v > 0.0, "wealth: weights must be positive");
    if (r.rates.kind == RateSource::Kind::fixed)
        for (double v : r.rates.fixed)
            require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
                    "rates: must lie in [0, 1]");
    return r;
}

std::vector<Group> explicit_groups(const ScenarioConfig& s) {
    std::vector<Group> groups;
    groups.reserve(s.groups.size());
    for (const GroupEntry& g : s.groups) {
        require(std::isfinite(g.weight) && g.weight > 0.0,
                "group: weights must be positive");
        require(std::isfinite(g.rate) && g.rate >= 0.0 && g.rate <= 1.0,
                "group: rates must lie in [0, 1]");
        groups.push_back({g.weight, g.rate});
    }
    return groups;
}

}  // namespace

Scenario scenario_from_config(const Config& config, std::uint64_t seed) {
    const ScenarioConfig& s = config.scenario;
    const CoreParams core = core_params(s);

    std::vector<Group> groups;
    if (!s.groups.empty()) {
        groups = explicit_groups(s);
    } else {
        const ResolvedSources src = resolve_sources(s);
        Vec weights;
        switch (src.wealth.kind) {
            case WealthSource::Kind::pareto_weights:
                try {
                    weights = index_weights(src.wealth.pareto, src.n,
                                            src.wealth.sorted_ascending);
                } catch (const std::exception& e) {
                    throw ConfigError(0, std::string("wealth: ") + e.what());
                }
                break;
            case WealthSource::Kind::equal:
                weights = Vec::Constant(src.n, 1.0 / static_cast<double>(src.n));
                break;
            case WealthSource::Kind::fixed:
                weights = Eigen::Map<const Vec>(src.wealth.fixed.data(), src.n);
                break;
        }
        Vec rates;
        if (src.rates.kind == RateSource::Kind::gamma_draws) {
            SeededSampler gen(SeededSampler::derive_seed(seed, 0));
            rates = sample(gen, src.rates.gamma, src.n);
            if (src.rates.normalize) rates /= rates.sum();
            for (Index i = 0; i < src.n; ++i)
                require(rates[i] >= 0.0 && rates[i] <= 1.0,
                        "rates: sampled rates fall outside [0, 1]; drop 'raw'");
        } else {
            rates = Eigen::Map<const Vec>(src.rates.fixed.data(), src.n);
        }
        groups.reserve(static_cast<std::size_t>(src.n));
        for (Index i = 0; i < src.n; ++i) groups.push_back({weights[i], rates[i]});
    }
    return Scenario(groups, core.theta, core.sigma, core.total_resource, core.time);
}

SweepSpec sweep_from_config(const Config& config, std::uint64_t seed) {
    SweepSpec sw{scenario_from_config(config, seed)};
    const ExperimentConfig& e = config.experiment;
    require(e.variable.has_value(), "variable: required for a sweep");
    require(!e.grid.empty(), "grid: required for a sweep");
    require(!e.outputs.empty(), "outputs: required for a sweep");
    for (std::size_t i = 1; i < e.grid.size(); ++i)
        require(e.grid[i] > e.grid[i - 1], "grid: must be strictly increasing");
    if (*e.variable == SweepVariable::theta)
        require(e.grid.front() >= 0.0 && e.grid.back() <= 1.0,
                "grid: theta grid must lie in [0, 1]");
    else
        require(e.grid.front() >= 0.0, "grid: time grid must be nonnegative");
    sw.variable = *e.variable;
    sw.grid = e.grid;
    sw.outputs = e.outputs;
    sw.eta = config.scenario.eta.value_or(1.0);
    require(std::isfinite(sw.eta) && sw.eta > 0.0, "eta: must be positive");
    if (config.growth) {
        sw.growth = growth_from(*config.growth);
        if (config.growth->step) {
            require(sw.variable == SweepVariable::time,
                    "step: stock integration applies to time sweeps only");
            sw.stock_step = config.growth->step;
        }
    }
    sw.policy_mode = e.mode.value_or(PolicyMode::tolerance);
    sw.aggregate = e.aggregate.value_or(1.0);
    require(std::isfinite(sw.aggregate) && sw.aggregate > 0.0,
            "aggregate: must be positive");
    return sw;
}

GrowthModel growth_model_from_config(const Config& config) {
    require(config.growth.has_value(), "growth: block required (gamma, delta, S0)");
    return growth_from(*config.growth);
}

MonteCarloSpec monte_carlo_from_config(const Config& config, std::uint64_t seed) {
    const ScenarioConfig& s = config.scenario;
    const CoreParams core = core_params(s);

    MonteCarloSpec mc;
    if (!s.groups.empty()) {
        const std::vector<Group> groups = explicit_groups(s);
        mc.n_groups = static_cast<Index>(groups.size());
        mc.wealth.kind = WealthSource::Kind::fixed;
        mc.rates.kind = RateSource::Kind::fixed;
        for (const Group& g : groups) {
            mc.wealth.fixed.push_back(g.wealth_weight);
            mc.rates.fixed.push_back(g.discount_rate);
        }
    } else {
        const ResolvedSources src = resolve_sources(s);
        mc.n_groups = src.n;
        mc.wealth = src.wealth;
        mc.rates = src.rates;
    }
    mc.replications = config.experiment.replications.value_or(1);
    mc.seed = seed;
    mc.theta = core.theta;
    mc.sigma = core.sigma;
    mc.total_resource = core.total_resource;
    mc.time = core.time;
    return mc;
}

FigureOverrides overrides_from_config(const Config& config,
                                      std::optional<std::uint64_t> seed) {
    const ScenarioConfig& s = config.scenario;
    require(s.groups.empty(), "group: figures take sources, not explicit groups");
    FigureOverrides o;
    o.n_groups = s.n_groups;
    if (s.theta) {
        check_theta(*s.theta);
        o.theta = s.theta;
    }
    if (s.sigma) {
        check_sigma(*s.sigma);
        o.sigma = s.sigma;
    }
    if (s.eta) {
        require(std::isfinite(*s.eta) && *s.eta > 0.0, "eta: must be positive");
        o.eta = s.eta;
    }
    if (s.time) {
        require(std::isfinite(*s.time) && *s.time >= 0.0, "t: must be nonnegative");
        o.time = s.time;
    }
    if (s.total_resource) {
        require(std::isfinite(*s.total_resource) && *s.total_resource > 0.0,
                "w: must be positive");
        o.total_resource = s.total_resource;
    }
    o.seed = seed;
    o.replications = config.experiment.replications;
    if (config.growth) {
        o.growth = growth_from(*config.growth);
        o.stock_step = config.growth->step;
    }
    o.policy_mode = config.experiment.mode;
    return o;
}

}  // namespace sdr
