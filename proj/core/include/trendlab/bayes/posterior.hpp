#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "trendlab/bayes/regression_data.hpp"

namespace trendlab::bayes {

enum class Param : std::size_t { alpha = 0, beta = 1, sigma = 2, nu = 3 };
inline constexpr std::size_t kParamCount = 4;
std::string_view param_name(Param p);

struct FitConfig {
    std::size_t chains = 4;
    std::size_t draws = 2000;   // kept draws per chain
    std::size_t warmup = 1000;  // adaptation draws per chain, discarded
    std::uint64_t seed = 1;
    double target_acceptance = 0.44;
};

struct Diagnostics {
    double rhat = 0.0;  // split R-hat
    double ess = 0.0;   // multi-chain effective sample size
};

/// Posterior draws of (alpha, beta, sigma, nu), chain-major: the draws of chain
/// c occupy [c * draws, (c + 1) * draws).
struct Posterior {
    std::size_t chains = 0;
    std::size_t draws = 0;
    std::array<std::vector<double>, kParamCount> samples;
    std::array<Diagnostics, kParamCount> diagnostics;
    std::array<double, kParamCount> acceptance{};  // post-warmup acceptance rate per parameter

    std::size_t size() const { return samples[0].size(); }
    std::span<const double> operator[](Param p) const { return samples[static_cast<std::size_t>(p)]; }
    const Diagnostics& diagnostic(Param p) const { return diagnostics[static_cast<std::size_t>(p)]; }
    double max_rhat() const;
    double min_ess() const;
};

/// Bayesian Student-t regression y ~ t(nu, alpha + beta x, sigma) with priors
/// alpha, beta ~ N(0, 5^2), sigma ~ HalfNormal(2.5), nu ~ Gamma(2, rate 0.1)
/// truncated to nu > 1. Sampled by random-walk Metropolis-within-Gibbs on
/// (alpha, beta, log sigma, log(nu - 1)); every coordinate has its own step
/// size, tuned during warmup by Robbins-Monro towards `target_acceptance`.
/// Deterministic for a given (data, config).
/// Throws InputError for fewer than 3 points, mismatched lengths, non-finite
/// values or constant x ("unidentifiable slope").
Posterior fit(const RegressionData& data, const FitConfig& config = {});

/// Split R-hat and multi-chain ESS of one parameter's chain-major draws.
Diagnostics diagnose(std::span<const double> draws, std::size_t chains);

struct ParameterSummary {
    double mean = 0.0;
    double sd = 0.0;
    double q01 = 0.0;
    double q05 = 0.0;
    double q50 = 0.0;
    double q95 = 0.0;
    double q99 = 0.0;
};

ParameterSummary summarize(std::span<const double> draws);

/// Linear-interpolation sample quantile (type 7) of already sorted values.
double sorted_quantile(std::span<const double> sorted, double p);

}  // namespace trendlab::bayes
