#include <random>

#include "trendlab/fixtures/fixtures.hpp"

namespace trendlab::fixtures {

bayes::RegressionData planted_regression(std::size_t n, std::uint64_t seed, const RegressionTruth& truth) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> x_dist(0.0, 1.0);
    std::student_t_distribution<double> noise(truth.nu);
    bayes::RegressionData data;
    data.x.reserve(n);
    data.y.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = x_dist(rng);
        data.x.push_back(x);
        data.y.push_back(truth.alpha + truth.beta * x + truth.sigma * noise(rng));
    }
    return data;
}

}  // namespace trendlab::fixtures
