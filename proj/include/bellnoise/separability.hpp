// separability.hpp
// Two independent separability tests for the noisy Bell-state family: the
// positive-partial-transpose (PPT) criterion and the majorization
// criterion. Both reduce to the same region 3p + r <= 1.

#pragma once

#include <array>

#include "bellnoise/state.hpp"

namespace bellnoise {

// Spectrum of the partial transpose, nonincreasing:
// ((1+p+r)/4, (1+p+r)/4, (1+p-r)/4, (1-3p-r)/4).
struct PptSpectrum {
    std::array<double, 4> lambda{};
};

enum class Criterion { Ppt, Majorization };

struct SeparabilityVerdict {
    bool separable = false;
    double margin = 0.0;  // 1 - 3p - r: positive inside the separable region
    Criterion criterion = Criterion::Ppt;
};

PptSpectrum ppt_spectrum_closed_form(const NoiseParams& params);

// Separable iff every PPT eigenvalue is nonnegative, i.e. 3p + r <= 1.
// The boundary 3p + r = 1 counts as separable.
SeparabilityVerdict ppt_verdict(const NoiseParams& params);

// Checks whether the state spectrum is majorized by the reduced-state
// spectrum (1/2, 1/2, 0, 0); a partial-sum excess beyond 1e-12 means
// entangled.
SeparabilityVerdict majorization_verdict(const NoiseParams& params);

struct BoundaryPoint {
    double r = 0.0;           // clamped to the physical triangle
    bool inside_domain = true;  // false once the line 3p + r = 1 exits r >= 0
};

// The r value on the separability boundary at the given p: r = 1 - 3p for
// p <= 1/3, otherwise 0 with inside_domain = false.
BoundaryPoint separability_boundary(double p);

}  // namespace bellnoise
