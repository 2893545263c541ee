// state.hpp
// The two-photon polarization state under study: a pure |Phi+> component of
// weight p mixed with colored noise (weight r) and white noise (weight
// 1-p-r). Provides the density matrix, its closed-form spectrum, the
// Bell-basis weights and the von Neumann entropy surface.

#pragma once

#include <array>
#include <vector>

#include "bellnoise/linalg.hpp"

namespace bellnoise {

// Mixing weights. The white-noise weight 1-p-r is implied, never stored.
struct NoiseParams {
    double p = 0.0;
    double r = 0.0;
};

// Throws std::invalid_argument naming the violated constraint
// (0 <= p <= 1, r >= 0, p + r <= 1).
void validate(const NoiseParams& params);

// A 4x4 density matrix in the computational basis {|00>,|01>,|10>,|11>}.
// Construction enforces Hermiticity (1e-12), unit trace (1e-12) and
// eigenvalues >= -1e-12.
class TwoQubitState {
public:
    explicit TwoQubitState(const Mat4c& matrix);

    const Mat4c& matrix() const { return matrix_; }

private:
    Mat4c matrix_;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// Projector |k><k| onto one of the four maximally entangled Bell states.
Mat4c bell_projector(BellState k);

struct BellWeights {
    double w_phi_plus = 0.0;
    double w_phi_minus = 0.0;
    double w_psi_plus = 0.0;
    double w_psi_minus = 0.0;
};

TwoQubitState make_state(const NoiseParams& params);

// Spectrum ((1+3p+r)/4, (1-p+r)/4, (1-p-r)/4, (1-p-r)/4), nonincreasing.
std::array<double, 4> spectrum_closed_form(const NoiseParams& params);

// Weights of the state's diagonal form in the Bell basis; they reproduce
// make_state via sum_k w_k |k><k|.
BellWeights bell_weights(const NoiseParams& params);

// Base-2 von Neumann entropy in [0, 2]; 0*log(0) terms contribute zero.
double von_neumann_entropy(const NoiseParams& params);

struct EntropySample {
    double p;
    double r;
    double entropy;
};

// Samples the triangle {p >= 0, r >= 0, p + r <= 1} on a uniform grid_n x
// grid_n grid; points outside the triangle are omitted, not clamped. Rows
// are ordered lexicographically in (p, r).
std::vector<EntropySample> entropy_surface(int grid_n);

}  // namespace bellnoise
