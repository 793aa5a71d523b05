#pragma once

#include "sdr/types.hpp"

#include <cstdint>

namespace sdr {

// Output of the brute-force welfare maximizer. grid_resolution is the step
// size left after all halvings; iterations counts objective evaluations.
struct OracleResult {
    Vec argmax;
    double welfare_value = 0.0;
    double grid_resolution = 0.0;
    std::int64_t iterations = 0;
};

struct ValidationReport {
    Vec closed_form;
    OracleResult oracle;
    double max_abs_gap = 0.0;  // ||closed - oracle||_inf
    double welfare_gap = 0.0;  // W(oracle) - W(closed)
    bool closed_form_valid = false;
    bool flag_agrees = false;
};

// Derivative-free maximizer of the planner objective over the simplex
// {x >= floor, sum x = w}: exhaustive lattice scan, ten step halvings of
// greedy pattern moves along pairwise transfer directions (plus a transfer
// into the current minimum-utility set, which walks along the kinks of the
// min term), then golden-section line maxima until a full cycle improves
// welfare by less than 1e-12. Never consults the closed form. Supports up
// to four groups.
OracleResult maximize(const Scenario& s, double resolution, double positivity_floor);

// Default positivity floor 1e-9 * total resource.
OracleResult maximize(const Scenario& s, double resolution);

// Runs allocate and the oracle side by side. flag_agrees is true when the
// closed form claims validity (favored group attains the minimum utility)
// and the oracle confirms it: consumption gap within twice the final grid
// resolution and welfare gap within 1e-6.
ValidationReport validate_closed_form(const Scenario& s, double resolution);

}  // namespace sdr
