#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trendlab/bayes/posterior.hpp"

namespace trendlab::bayes {

struct BandPoint {
    double x = 0.0;
    double mean = 0.0;
    double q01 = 0.0;
    double q05 = 0.0;
    double q95 = 0.0;
    double q99 = 0.0;
};

struct PredictionBand {
    std::vector<BandPoint> points;
};

/// Posterior-predictive band: at every x one y* ~ t(nu_s, alpha_s + beta_s x,
/// sigma_s) is drawn per posterior sample s; reports the empirical mean and
/// the 1/5/95/99 % quantiles. Throws InputError on empty x or posterior.
PredictionBand predict_bands(const Posterior& posterior, std::span<const double> x, std::uint64_t seed);

/// The 5 % predictive quantile at every point.
std::vector<double> value_at_risk(const PredictionBand& band);

struct Histogram {
    std::vector<double> edges;    // bins + 1 ascending edges
    std::vector<double> heights;  // density: sum(height * width) == 1
};

/// Density-normalised histogram of the beta draws over [min, max]; when all
/// draws coincide the range is widened to value +- 0.5. Needs >= 100 draws.
Histogram beta_density(const Posterior& posterior, std::size_t bins = 50);

}  // namespace trendlab::bayes
