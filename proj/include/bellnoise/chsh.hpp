// chsh.hpp
// CHSH Bell quantity for the noisy Bell-state family: the two-angle
// observable family, the Bell operator, the analytic beta(p,r,theta,phi)
// and its maximization over analyzer angles.

#pragma once

#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "bellnoise/state.hpp"

namespace bellnoise {

inline constexpr double kClassicalBound = 2.0;
inline constexpr double kTsirelsonBound = 2.0 * std::numbers::sqrt2;

// Analyzer orientations in radians.
struct AnalyzerSettings {
    double theta = 0.0;
    double phi = 0.0;
};

struct BellMaxResult {
    double beta_max = 0.0;
    // Canonical branch: theta in [0, pi], phi in [0, pi), ties broken toward
    // the smaller theta.
    AnalyzerSettings settings;
    NoiseParams params;
};

// cos(alpha)*sigma_z + sin(alpha)*sigma_x: Hermitian, traceless,
// eigenvalues +-1.
Mat2c observable(double alpha);

// -A0xB0 - A0xB1 - A1xB0 + A1xB1 with A0 = observable(0),
// A1 = observable(theta), B0 = observable(phi), B1 = observable(phi-theta).
Mat4c bell_operator(const AnalyzerSettings& s);

// beta(p,r,theta,phi) = cos(phi)[(2p+r)(sin^2(theta)+cos(theta)) +
// r*cos(theta)] - sin(phi)(2p+r)[cos(theta)-1]sin(theta). Its magnitude
// equals |Tr(rho * bell_operator)|.
double beta_analytic(const NoiseParams& params, const AnalyzerSettings& s);

enum class NoiseVariant { White, Colored };

// Reduced beta formulas on the two boundary lines: White requires r = 0,
// Colored requires r = 1 - p; a mismatch is rejected.
std::function<double(double theta, double phi)> beta_special(
    const NoiseParams& params, NoiseVariant variant);

// Maximizes |beta| over the analyzer angles. phi is eliminated in closed
// form (beta is linear in cos(phi), sin(phi)); the remaining 1-D problem in
// theta is solved by dense seeding plus local refinement.
BellMaxResult beta_max(const NoiseParams& params);

struct BetaMaxSample {
    double p;
    double r;
    double beta_max;
    double theta_star;
    double phi_star;
};

// Sweep of beta_max over the valid (p, r) triangle, rows in lexicographic
// grid order.
std::vector<BetaMaxSample> beta_max_surface(int grid_n);

// Noise-composition lines along which angle curves and violation thresholds
// are traced: r = 0, r = (1-p)/2, r = 1-p.
enum class AnglePolicy { Werner, HalfColored, Colored };

struct AngleSample {
    double p;
    double theta_star;
    double phi_star;
};

std::vector<AngleSample> optimal_angle_curves(AnglePolicy policy,
                                              std::span<const double> p_grid);

struct ThresholdPolicy {
    enum class Kind { Werner, Colored, FixedTotal };
    Kind kind = Kind::Werner;
    double share = 1.0;  // p + r along the line; FixedTotal only

    static ThresholdPolicy werner() { return {Kind::Werner, 1.0}; }
    static ThresholdPolicy colored() { return {Kind::Colored, 1.0}; }
    static ThresholdPolicy fixed_total(double share) {
        return {Kind::FixedTotal, share};
    }
};

// Smallest p on the policy line above which beta_max exceeds the classical
// bound 2; returns 0 when every probed p > 0 already violates. Throws
// std::domain_error when the line never crosses the bound.
double violation_threshold(const ThresholdPolicy& policy);

}  // namespace bellnoise
