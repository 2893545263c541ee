#include "bellnoise/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bellnoise {

namespace {

constexpr double kTol = 1e-12;

void fail(const std::string& what) { throw std::invalid_argument(what); }

[[noreturn]] void fail_params(const NoiseParams& params, const char* what) {
    std::ostringstream msg;
    msg << "invalid noise parameters (p=" << params.p << ", r=" << params.r
        << "): " << what;
    throw std::invalid_argument(msg.str());
}

}  // namespace

void validate(const NoiseParams& params) {
    if (!(params.p >= 0.0)) fail_params(params, "p < 0");
    if (!(params.p <= 1.0)) fail_params(params, "p > 1");
    if (!(params.r >= 0.0)) fail_params(params, "r < 0");
    if (!(params.p + params.r <= 1.0)) fail_params(params, "p + r > 1");
}

TwoQubitState::TwoQubitState(const Mat4c& matrix) : matrix_(matrix) {
    const double dev = hermiticity_deviation(matrix);
    if (dev > kTol) {
        std::ostringstream msg;
        msg << "density matrix not Hermitian, max |m - m^H| = " << dev;
        fail(msg.str());
    }
    const cdouble tr = trace(matrix);
    if (std::abs(tr - cdouble{1.0}) > kTol) {
        std::ostringstream msg;
        msg << "density matrix trace " << tr.real() << " != 1";
        fail(msg.str());
    }
    const auto eig = hermitian_eigenvalues(matrix);
    if (eig.back() < -kTol) {
        std::ostringstream msg;
        msg << "density matrix not positive semidefinite, min eigenvalue = "
            << eig.back();
        fail(msg.str());
    }
}

Mat4c bell_projector(BellState k) {
    // Bell kets in the computational basis, up to the 1/sqrt(2) factor that
    // the outer product absorbs as 1/2.
    std::array<cdouble, 4> ket{};
    switch (k) {
        case BellState::PhiPlus:
            ket[0] = 1.0;
            ket[3] = 1.0;
            break;
        case BellState::PhiMinus:
            ket[0] = 1.0;
            ket[3] = -1.0;
            break;
        case BellState::PsiPlus:
            ket[1] = 1.0;
            ket[2] = 1.0;
            break;
        case BellState::PsiMinus:
            ket[1] = 1.0;
            ket[2] = -1.0;
            break;
    }
    Mat4c proj;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            proj(i, j) = 0.5 * ket[i] * std::conj(ket[j]);
    return proj;
}

TwoQubitState make_state(const NoiseParams& params) {
    validate(params);
    const double p = params.p;
    const double r = params.r;
    Mat4c m;
    m(0, 0) = m(3, 3) = 0.25 * (1.0 + p + r);
    m(1, 1) = m(2, 2) = 0.25 * (1.0 - p - r);
    m(0, 3) = m(3, 0) = 0.5 * p;
    return TwoQubitState(m);
}

std::array<double, 4> spectrum_closed_form(const NoiseParams& params) {
    validate(params);
    const double p = params.p;
    const double r = params.r;
    return {0.25 * (1.0 + 3.0 * p + r), 0.25 * (1.0 - p + r),
            0.25 * (1.0 - p - r), 0.25 * (1.0 - p - r)};
}

BellWeights bell_weights(const NoiseParams& params) {
    const auto lambda = spectrum_closed_form(params);
    return {lambda[0], lambda[1], lambda[2], lambda[3]};
}

double von_neumann_entropy(const NoiseParams& params) {
    const auto lambda = spectrum_closed_form(params);
    double s = 0.0;
    for (double v : lambda) {
        if (v < 0.0) v = 0.0;  // clamp -1e-12-scale roundoff
        if (v > 0.0) s -= v * std::log2(v);
    }
    return s;
}

std::vector<EntropySample> entropy_surface(int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("entropy_surface: grid_n < 2");
    std::vector<EntropySample> rows;
    for (int i = 0; i < grid_n; ++i) {
        const double p = static_cast<double>(i) / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            const double r = static_cast<double>(j) / (grid_n - 1);
            if (p + r > 1.0 + 1e-12) continue;
            rows.push_back({p, r, von_neumann_entropy({p, std::min(r, 1.0 - p)})});
        }
    }
    return rows;
}

}  // namespace bellnoise
