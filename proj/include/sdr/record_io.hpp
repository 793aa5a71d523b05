#pragma once

#include "sdr/experiments.hpp"

#include <string>

namespace sdr {

// Unit tag for a column name; everything is in model units, so this mostly
// distinguishes indices, resource amounts and rates.
std::string column_unit(const std::string& column);

// Comment-prefixed metadata (`# key = value`), a units line, summary and
// histogram lines, then a header row and one comma-separated data row per
// record row. Numbers carry `precision` significant digits.
std::string to_csv(const ExperimentRecord& rec, int precision = 12);

// Same content as an ordered JSON object with meta/units/columns/rows/
// summaries/histograms members. Values are rounded to `precision`
// significant digits before emission so the two formats agree.
std::string to_json(const ExperimentRecord& rec, int precision = 12);

}  // namespace sdr
