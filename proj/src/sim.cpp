#include "bellnoise/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace bellnoise {

namespace {

// SplitMix64: the documented mixer used to derive independent substream
// seeds from (seed, stream index).
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

// Uniform in [0, 1) built from the top 53 bits, identical on every platform
// for a given engine state.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF sampling over the four joint-outcome cells.
OutcomeCounts sample_counts(const OutcomeDistribution& dist, long long n,
                            std::mt19937_64& rng) {
    const double c0 = dist.p_pp;
    const double c1 = c0 + dist.p_pm;
    const double c2 = c1 + dist.p_mp;
    OutcomeCounts counts;
    for (long long i = 0; i < n; ++i) {
        const double u = uniform01(rng);
        if (u < c0)
            ++counts.pp;
        else if (u < c1)
            ++counts.pm;
        else if (u < c2)
            ++counts.mp;
        else
            ++counts.mm;
    }
    return counts;
}

double correlation_from_counts(const OutcomeCounts& counts, long long n) {
    return static_cast<double>(counts.pp - counts.pm - counts.mp + counts.mm) /
           static_cast<double>(n);
}

}  // namespace

double correlation(const OutcomeDistribution& dist) {
    return dist.p_pp - dist.p_pm - dist.p_mp + dist.p_mm;
}

OutcomeDistribution outcome_probabilities(const NoiseParams& params,
                                          double alpha_a, double alpha_b) {
    const Mat4c rho = make_state(params).matrix();
    const Mat2c id = Mat2c::identity();
    const Mat2c oa = observable(alpha_a);
    const Mat2c ob = observable(alpha_b);
    const Mat2c pa_plus = cdouble{0.5} * (id + oa);
    const Mat2c pa_minus = cdouble{0.5} * (id - oa);
    const Mat2c pb_plus = cdouble{0.5} * (id + ob);
    const Mat2c pb_minus = cdouble{0.5} * (id - ob);

    const auto born = [&](const Mat2c& pa, const Mat2c& pb) {
        // Real for Hermitian projectors; clamp sub-epsilon negatives.
        return std::max(0.0, trace_product(rho, kron(pa, pb)).real());
    };
    return {born(pa_plus, pb_plus), born(pa_plus, pb_minus),
            born(pa_minus, pb_plus), born(pa_minus, pb_minus)};
}

OutcomeCounts sample_outcomes(const NoiseParams& params, double alpha_a,
                              double alpha_b, long long n,
                              std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_outcomes: n < 1");
    const auto dist = outcome_probabilities(params, alpha_a, alpha_b);
    std::mt19937_64 rng(splitmix64(seed));
    return sample_counts(dist, n, rng);
}

double estimate_correlation(const NoiseParams& params, double alpha_a,
                            double alpha_b, long long n, std::uint64_t seed) {
    return correlation_from_counts(
        sample_outcomes(params, alpha_a, alpha_b, n, seed), n);
}

BetaEstimate estimate_beta(const NoiseParams& params,
                           const AnalyzerSettings& s, long long n_per_setting,
                           std::uint64_t seed) {
    if (n_per_setting < 100)
        throw std::invalid_argument("estimate_beta: n_per_setting < 100");
    validate(params);

    // Setting pairs in the order (A0,B0), (A0,B1), (A1,B0), (A1,B1); the
    // estimate enters the combination with signs (-,-,-,+).
    const std::array<std::pair<double, double>, 4> angles{
        {{0.0, s.phi}, {0.0, s.phi - s.theta}, {s.theta, s.phi},
         {s.theta, s.phi - s.theta}}};
    const std::array<double, 4> sign{-1.0, -1.0, -1.0, 1.0};

    double value = 0.0;
    double variance = 0.0;
    for (int k = 0; k < 4; ++k) {
        const auto dist =
            outcome_probabilities(params, angles[k].first, angles[k].second);
        std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(k)));
        const OutcomeCounts counts = sample_counts(dist, n_per_setting, rng);
        const double est = correlation_from_counts(counts, n_per_setting);
        value += sign[k] * est;
        // Plug-in binomial variance, floored at one count so a degenerate
        // sample still reports a nonzero error.
        const double n = static_cast<double>(n_per_setting);
        variance += std::max(1.0 - est * est, 1.0 / n) / n;
    }
    return {value, std::sqrt(variance), n_per_setting};
}

}  // namespace bellnoise
