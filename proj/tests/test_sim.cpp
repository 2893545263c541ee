#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "bellnoise/sim.hpp"
#include "helpers.hpp"

using namespace bellnoise;

namespace {
constexpr double kPi = std::numbers::pi;

double analytic_correlation(const NoiseParams& params, double a, double b) {
    return params.p * std::cos(a - b) +
           params.r * std::cos(a) * std::cos(b);
}
}  // namespace

TEST_CASE("outcome probabilities at reference points") {
    // Perfect sigma_z correlation of the pure Bell state.
    const auto aligned = outcome_probabilities({1.0, 0.0}, 0.0, 0.0);
    CHECK(aligned.p_pp == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(aligned.p_mm == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(aligned.p_pm < 1e-14);
    CHECK(aligned.p_mp < 1e-14);

    const auto mixed = outcome_probabilities({0.0, 0.0}, 0.3, -1.2);
    for (double v : {mixed.p_pp, mixed.p_pm, mixed.p_mp, mixed.p_mm})
        CHECK(v == doctest::Approx(0.25).epsilon(1e-14));

    // Orthogonal analyzers decorrelate the (0.5, 0.3) state.
    CHECK(std::abs(correlation(
              outcome_probabilities({0.5, 0.3}, 0.0, kPi / 2))) < 1e-12);
}

TEST_CASE("outcome probabilities are a distribution with the expected correlation") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    for (int trial = 0; trial < 10000; ++trial) {
        const NoiseParams params = testutil::random_params(rng);
        const double a = angle(rng);
        const double b = angle(rng);
        const auto dist = outcome_probabilities(params, a, b);
        double sum = 0.0;
        for (double v : {dist.p_pp, dist.p_pm, dist.p_mp, dist.p_mm}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            sum += v;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
        CHECK(std::abs(correlation(dist) - analytic_correlation(params, a, b)) <
              1e-12);
    }
}

TEST_CASE("estimate_beta is deterministic per seed") {
    const NoiseParams params{0.6, 0.2};
    const AnalyzerSettings s{1.1, 0.4};
    const auto first = estimate_beta(params, s, 20000, 99);
    const auto second = estimate_beta(params, s, 20000, 99);
    CHECK(first.value == second.value);
    CHECK(first.std_error == second.std_error);
    CHECK(first.samples_per_setting == 20000);

    const auto other_seed = estimate_beta(params, s, 20000, 100);
    CHECK(first.value != other_seed.value);

    CHECK_THROWS_AS(estimate_beta(params, s, 99, 1), std::invalid_argument);

    // Perfectly correlated settings: every draw is identical, yet the
    // reported error stays positive.
    const auto degenerate = estimate_beta({1.0, 0.0}, {0.0, 0.0}, 1000, 3);
    CHECK(std::abs(degenerate.value) == 2.0);
    CHECK(degenerate.std_error > 0.0);
}

TEST_CASE("estimate_beta reproduces the Tsirelson value statistically") {
    const auto est =
        estimate_beta({1.0, 0.0}, {kPi / 2, kPi / 4}, 1000000, 2024);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(std::abs(est.value) - kTsirelsonBound) <
          4.0 * est.std_error);
}

TEST_CASE("estimate_beta tracks the analytic value at a generic point") {
    const NoiseParams params{0.5, 0.3};
    const AnalyzerSettings s{0.9, 0.35};
    const auto est = estimate_beta(params, s, 1000000, 7);
    const double expected = std::abs(beta_analytic(params, s));
    CHECK(std::abs(std::abs(est.value) - expected) < 4.0 * est.std_error);
}

TEST_CASE("std_error shows the expected 1/sqrt(N) decay") {
    const NoiseParams params{0.7, 0.2};
    const AnalyzerSettings s{1.2, 0.6};
    const auto small = estimate_beta(params, s, 1000, 5);
    const auto large = estimate_beta(params, s, 1000000, 5);
    const double ratio = small.std_error / large.std_error;
    CHECK(ratio > 0.5 * std::sqrt(1000.0));
    CHECK(ratio < 2.0 * std::sqrt(1000.0));
}

TEST_CASE("empirical correlation converges like 1/sqrt(N)") {
    const NoiseParams params{0.6, 0.3};
    const double a = 0.8;
    const double b = -0.4;
    const double truth = analytic_correlation(params, a, b);

    std::array<long long, 4> sizes{1000, 10000, 100000, 1000000};
    std::array<double, 4> scaled{};
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        double sq = 0.0;
        const int reps = 32;
        for (int rep = 0; rep < reps; ++rep) {
            const double est = estimate_correlation(
                params, a, b, sizes[k],
                1000 + static_cast<std::uint64_t>(rep));
            sq += (est - truth) * (est - truth);
        }
        scaled[k] = std::sqrt(sq / reps) *
                    std::sqrt(static_cast<double>(sizes[k]));
    }
    // rms * sqrt(N) should be flat across three decades, within a factor 2.
    for (std::size_t k = 1; k < scaled.size(); ++k) {
        CHECK(scaled[k] < 2.0 * scaled[0]);
        CHECK(scaled[k] > 0.5 * scaled[0]);
    }
}

TEST_CASE("sampled counts pass a chi-square test against the distribution") {
    const NoiseParams params{0.6, 0.2};
    const double a = 0.7;
    const double b = 0.3;
    const auto dist = outcome_probabilities(params, a, b);
    const long long n = 1000000;
    const auto counts = sample_outcomes(params, a, b, n, 314159);

    const std::array<double, 4> probs{dist.p_pp, dist.p_pm, dist.p_mp,
                                      dist.p_mm};
    const std::array<long long, 4> observed{counts.pp, counts.pm, counts.mp,
                                            counts.mm};
    double chi2 = 0.0;
    int dof = -1;
    for (int k = 0; k < 4; ++k) {
        const double expected = probs[k] * static_cast<double>(n);
        if (expected == 0.0) {
            CHECK(observed[k] == 0);
            continue;
        }
        ++dof;
        const double diff = static_cast<double>(observed[k]) - expected;
        chi2 += diff * diff / expected;
    }
    // 0.1% critical values for 1..3 degrees of freedom.
    const std::array<double, 3> critical{10.828, 13.816, 16.266};
    REQUIRE(dof >= 1);
    CHECK(chi2 < critical[dof - 1]);
}
