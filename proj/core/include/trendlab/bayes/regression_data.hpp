#pragma once

#include <vector>

namespace trendlab::bayes {

/// Paired observations for the Student-t regression y ~ t(nu, alpha + beta x, sigma).
/// When produced by corpus::align_for_regression both columns are z-scored.
struct RegressionData {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const { return x.size(); }
};

}  // namespace trendlab::bayes
