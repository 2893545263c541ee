// fit.hpp
// Noise-fraction fitting: inverts beta_max along r for measured maximal
// Bell values and splits the total noise weight into white and colored
// percentages.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bellnoise/chsh.hpp"

namespace bellnoise {

// One measured point: the pure-state weight assigned by the experimenter
// and the maximal Bell value observed there.
struct ExperimentPoint {
    double p = 0.0;
    double beta_exp = 0.0;
};

struct NoiseBreakdown {
    double p = 0.0;
    double r = 0.0;
    double white_pct = 0.0;    // share of the total noise weight 1-p
    double colored_pct = 0.0;
};

// Percentage split of the total noise weight 1-p between white (1-p-r) and
// colored (r). Requires p < 1: a pure state has no noise to decompose.
NoiseBreakdown noise_breakdown(const NoiseParams& params);

// The unique r with beta_max(p, r) = beta_exp, found by bisection over
// [0, 1-p] (beta_max is nondecreasing in r). beta_exp outside
// [beta_max(p,0), beta_max(p,1-p)] is rejected with both brackets named.
double fit_r(double p, double beta_exp);

struct FitRow {
    ExperimentPoint point;
    std::optional<NoiseBreakdown> breakdown;  // empty when the row failed
    double beta_fit = 0.0;                    // beta_max at the fitted (p, r)
    std::string error;
};

// Applies fit_r + noise_breakdown per point, preserving input order.
// Per-row failures are recorded in the row, never abort the batch.
std::vector<FitRow> fit_table(std::span<const ExperimentPoint> points);

struct CurveSample {
    double p = 0.0;
    double beta_max = 0.0;
};

// beta_max along r = (1-w)(1-p): w = 1 keeps only white noise (the Werner
// line), w = 0 only colored.
std::vector<CurveSample> fixed_white_fraction_curve(
    double white_fraction, std::span<const double> p_grid);

}  // namespace bellnoise
