// Shared test utilities: random draws, matrix comparisons and the
// independent oracles the module tests check against.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "bellnoise/chsh.hpp"
#include "bellnoise/linalg.hpp"
#include "bellnoise/state.hpp"

namespace testutil {

using bellnoise::AnalyzerSettings;
using bellnoise::Mat2c;
using bellnoise::Mat4c;
using bellnoise::NoiseParams;

inline double max_abs_diff(const Mat2c& a, const Mat2c& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        d = std::max(d, std::abs(a.e[i] - b.e[i]));
    return d;
}

inline double max_abs_diff(const Mat4c& a, const Mat4c& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        d = std::max(d, std::abs(a.e[i] - b.e[i]));
    return d;
}

inline double max_abs_diff(const std::array<double, 4>& a,
                           const std::array<double, 4>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline Mat2c random_mat2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat2c m;
    for (auto& v : m.e) v = {u(rng), u(rng)};
    return m;
}

inline Mat4c random_hermitian4(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat4c m;
    for (auto& v : m.e) v = {u(rng), u(rng)};
    return bellnoise::cdouble{0.5} * (m + adjoint(m));
}

inline NoiseParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        const NoiseParams params{u(rng), u(rng)};
        if (params.p + params.r <= 1.0) return params;
    }
}

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return v;
}

// Independent route for beta: the expectation of the Bell operator on the
// actual density matrix.
inline double beta_trace_magnitude(const NoiseParams& params,
                                   const AnalyzerSettings& s) {
    return std::abs(trace_product(bellnoise::make_state(params).matrix(),
                                  bellnoise::bell_operator(s)));
}

// Exhaustive |beta| search over an n_theta x n_phi angle grid, evaluating
// the analytic formula point by point. theta spans [0, pi] inclusive, phi
// spans [0, pi) (a phi shift by pi only flips the sign).
inline double beta_grid_oracle(const NoiseParams& params, int n_theta,
                               int n_phi) {
    constexpr double kPi = 3.14159265358979323846;
    double best = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        const double theta = kPi * static_cast<double>(i) / (n_theta - 1);
        for (int j = 0; j < n_phi; ++j) {
            const double phi = kPi * static_cast<double>(j) / n_phi;
            best = std::max(
                best, std::abs(beta_analytic(params, {theta, phi})));
        }
    }
    return best;
}

}  // namespace testutil
