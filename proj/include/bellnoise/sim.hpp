// sim.hpp
// Monte Carlo simulation of joint polarization measurements: Born-rule
// outcome distributions for a pair of analyzer angles and a seeded,
// reproducible estimator of the CHSH combination.

#pragma once

#include <cstdint>

#include "bellnoise/chsh.hpp"
#include "bellnoise/state.hpp"

namespace bellnoise {

// Joint outcome probabilities for results (a, b) in {+1, -1}^2.
struct OutcomeDistribution {
    double p_pp = 0.0;
    double p_pm = 0.0;
    double p_mp = 0.0;
    double p_mm = 0.0;
};

// sum_ab a*b*P(a,b)
double correlation(const OutcomeDistribution& dist);

// Born-rule probabilities P(a,b) = Tr[rho (Pi_a x Pi_b)] with Pi the +-1
// eigenprojectors of observable(alpha). The implied correlation is
// p*cos(alpha_a - alpha_b) + r*cos(alpha_a)*cos(alpha_b).
OutcomeDistribution outcome_probabilities(const NoiseParams& params,
                                          double alpha_a, double alpha_b);

struct OutcomeCounts {
    long long pp = 0;
    long long pm = 0;
    long long mp = 0;
    long long mm = 0;
};

// n joint-outcome draws, sampled by inverse CDF over the four cells of
// outcome_probabilities. Deterministic for a fixed seed.
OutcomeCounts sample_outcomes(const NoiseParams& params, double alpha_a,
                              double alpha_b, long long n, std::uint64_t seed);

struct BetaEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long long samples_per_setting = 0;
};

// Correlation estimate from n categorical draws of the joint outcome.
double estimate_correlation(const NoiseParams& params, double alpha_a,
                            double alpha_b, long long n, std::uint64_t seed);

// Estimates the four-correlation CHSH combination
// -<A0B0> - <A0B1> - <A1B0> + <A1B1> from n_per_setting draws per setting
// pair (n_per_setting >= 100). Each pair samples its own substream derived
// from (seed, setting index), so the result is identical no matter how the
// four settings are scheduled. The standard error comes from binomial
// variance propagation.
BetaEstimate estimate_beta(const NoiseParams& params,
                           const AnalyzerSettings& s, long long n_per_setting,
                           std::uint64_t seed);

}  // namespace bellnoise
