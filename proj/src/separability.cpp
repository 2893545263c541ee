#include "bellnoise/separability.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellnoise {

PptSpectrum ppt_spectrum_closed_form(const NoiseParams& params) {
    validate(params);
    const double p = params.p;
    const double r = params.r;
    return {{0.25 * (1.0 + p + r), 0.25 * (1.0 + p + r), 0.25 * (1.0 + p - r),
             0.25 * (1.0 - 3.0 * p - r)}};
}

SeparabilityVerdict ppt_verdict(const NoiseParams& params) {
    validate(params);
    const double margin = 1.0 - 3.0 * params.p - params.r;
    // The boundary 3p + r = 1 is separable (a zero PPT eigenvalue is still
    // nonnegative). The 4e-12 allowance below it matches the majorization
    // test's 1e-12 partial-sum tolerance (lambda_1 - 1/2 = -margin/4), so
    // the two criteria agree for every input, including points that only
    // cross the boundary through rounding.
    return {margin >= -4e-12, margin, Criterion::Ppt};
}

SeparabilityVerdict majorization_verdict(const NoiseParams& params) {
    auto x = spectrum_closed_form(params);
    std::sort(x.begin(), x.end(), std::greater<>());
    const std::array<double, 4> y_cumulative{0.5, 1.0, 1.0, 1.0};
    bool violated = false;
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        sum += x[k];
        if (sum > y_cumulative[k] + 1e-12) violated = true;
    }
    return {!violated, 1.0 - 3.0 * params.p - params.r, Criterion::Majorization};
}

BoundaryPoint separability_boundary(double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("separability_boundary: p outside [0, 1]");
    const double r = 1.0 - 3.0 * p;
    if (r < 0.0) return {0.0, false};
    return {r, true};
}

}  // namespace bellnoise
