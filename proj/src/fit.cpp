#include "bellnoise/fit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bellnoise {

NoiseBreakdown noise_breakdown(const NoiseParams& params) {
    validate(params);
    if (params.p >= 1.0)
        throw std::invalid_argument(
            "noise_breakdown: p = 1 leaves no noise to decompose");
    const double total = 1.0 - params.p;
    return {params.p, params.r, 100.0 * (total - params.r) / total,
            100.0 * params.r / total};
}

double fit_r(double p, double beta_exp) {
    if (!(p >= 0.0 && p < 1.0))
        throw std::invalid_argument("fit_r: p must lie in [0, 1)");
    double lo = 0.0;
    double hi = 1.0 - p;
    const double beta_lo = beta_max({p, lo}).beta_max;
    const double beta_hi = beta_max({p, hi}).beta_max;
    if (beta_exp < beta_lo - 1e-12 || beta_exp > beta_hi + 1e-12) {
        std::ostringstream msg;
        msg << "fit_r: beta_exp = " << beta_exp
            << " outside the attainable range [" << beta_lo << ", " << beta_hi
            << "] for p = " << p;
        throw std::out_of_range(msg.str());
    }
    if (std::abs(beta_exp - beta_lo) <= 1e-12) return lo;
    if (std::abs(beta_exp - beta_hi) <= 1e-12) return hi;

    for (int iter = 0; iter < 200 && hi - lo > 1e-9; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (beta_max({p, mid}).beta_max < beta_exp)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<FitRow> fit_table(std::span<const ExperimentPoint> points) {
    std::vector<FitRow> rows;
    rows.reserve(points.size());
    for (const auto& point : points) {
        FitRow row;
        row.point = point;
        try {
            if (!(point.p >= 0.0 && point.p <= 1.0))
                throw std::invalid_argument("p outside [0, 1]");
            if (!(point.beta_exp > 0.0 && point.beta_exp <= kTsirelsonBound))
                throw std::invalid_argument(
                    "beta_exp outside (0, 2*sqrt(2)]");
            const double r = fit_r(point.p, point.beta_exp);
            row.breakdown = noise_breakdown({point.p, r});
            row.beta_fit = beta_max({point.p, r}).beta_max;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CurveSample> fixed_white_fraction_curve(
    double white_fraction, std::span<const double> p_grid) {
    if (!(white_fraction >= 0.0 && white_fraction <= 1.0))
        throw std::invalid_argument(
            "fixed_white_fraction_curve: white fraction outside [0, 1]");
    std::vector<CurveSample> rows;
    rows.reserve(p_grid.size());
    for (double p : p_grid) {
        const double r = (1.0 - white_fraction) * (1.0 - p);
        rows.push_back({p, beta_max({p, r}).beta_max});
    }
    return rows;
}

}  // namespace bellnoise
