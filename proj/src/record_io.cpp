#include "sdr/record_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace sdr {

namespace {

std::string fmt(double v, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

double rounded(double v, int precision) {
    return std::strtod(fmt(v, precision).c_str(), nullptr);
}

bool starts_with(const std::string& s, const char* prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

std::string column_unit(const std::string& column) {
    if (column == "rep" || column == "group") return "index";
    if (column == "t") return "time";
    if (column == "pdf") return "density";
    if (column == "x" || starts_with(column, "x_") || column == "consumption" ||
        column == "wealth" || column == "abs_gap")
        return "resource";
    if (starts_with(column, "rho") || starts_with(column, "delta") ||
        column == "rate" || column == "rate_draw")
        return "per unit time";
    return "dimensionless";
}

std::string to_csv(const ExperimentRecord& rec, int precision) {
    validate_record(rec);
    std::ostringstream out;
    for (const auto& [key, value] : rec.meta)
        out << "# " << key << " = " << value << '\n';
    out << "# units =";
    for (const std::string& c : rec.columns) out << ' ' << c << ':' << column_unit(c);
    out << '\n';
    for (const ColumnSummary& s : rec.summaries)
        out << "# summary " << s.name << " mean = " << fmt(s.mean, precision)
            << " stddev = " << fmt(s.stddev, precision) << '\n';
    for (const Histogram& h : rec.histograms) {
        out << "# histogram " << h.name << " edges =";
        for (double e : h.edges) out << ' ' << fmt(e, precision);
        out << " counts =";
        for (std::int64_t c : h.counts) out << ' ' << c;
        out << '\n';
    }
    for (std::size_t c = 0; c < rec.columns.size(); ++c)
        out << (c ? "," : "") << rec.columns[c];
    out << '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << fmt(row[c], precision);
        out << '\n';
    }
    return out.str();
}

std::string to_json(const ExperimentRecord& rec, int precision) {
    validate_record(rec);
    nlohmann::ordered_json root;
    nlohmann::ordered_json meta;
    for (const auto& [key, value] : rec.meta) meta[key] = value;
    root["meta"] = std::move(meta);
    nlohmann::ordered_json units;
    for (const std::string& c : rec.columns) units[c] = column_unit(c);
    root["units"] = std::move(units);
    root["columns"] = rec.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rec.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (double v : row) r.push_back(rounded(v, precision));
        rows.push_back(std::move(r));
    }
    root["rows"] = std::move(rows);
    nlohmann::ordered_json summaries = nlohmann::ordered_json::array();
    for (const ColumnSummary& s : rec.summaries)
        summaries.push_back({{"name", s.name},
                             {"mean", rounded(s.mean, precision)},
                             {"stddev", rounded(s.stddev, precision)}});
    root["summaries"] = std::move(summaries);
    nlohmann::ordered_json histograms = nlohmann::ordered_json::array();
    for (const Histogram& h : rec.histograms) {
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (double e : h.edges) edges.push_back(rounded(e, precision));
        histograms.push_back(
            {{"name", h.name}, {"edges", std::move(edges)}, {"counts", h.counts}});
    }
    root["histograms"] = std::move(histograms);
    return root.dump(2) + "\n";
}

}  // namespace sdr
