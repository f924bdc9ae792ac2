#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "trendlab/bayes/prediction.hpp"
#include "trendlab/error.hpp"

namespace trendlab::bayes {

PredictionBand predict_bands(const Posterior& posterior, std::span<const double> x, std::uint64_t seed) {
    if (x.empty()) throw_input("no x values to predict at");
    const std::size_t s_count = posterior.size();
    if (s_count == 0) throw_input("empty posterior");
    const auto alpha = posterior[Param::alpha];
    const auto beta = posterior[Param::beta];
    const auto sigma = posterior[Param::sigma];
    const auto nu = posterior[Param::nu];

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    PredictionBand band;
    band.points.reserve(x.size());
    std::vector<double> ys(s_count);
    for (double xv : x) {
        double sum = 0.0;
        for (std::size_t s = 0; s < s_count; ++s) {
            // t_nu = Z / sqrt(chi2_nu / nu)
            std::chi_squared_distribution<double> chi2(nu[s]);
            const double z = gauss(rng);
            const double t = z / std::sqrt(chi2(rng) / nu[s]);
            ys[s] = alpha[s] + beta[s] * xv + sigma[s] * t;
            sum += ys[s];
        }
        std::sort(ys.begin(), ys.end());
        BandPoint p;
        p.x = xv;
        p.mean = sum / static_cast<double>(s_count);
        p.q01 = sorted_quantile(ys, 0.01);
        p.q05 = sorted_quantile(ys, 0.05);
        p.q95 = sorted_quantile(ys, 0.95);
        p.q99 = sorted_quantile(ys, 0.99);
        if (!std::isfinite(p.mean) || !std::isfinite(p.q01) || !std::isfinite(p.q99)) {
            throw_numeric(fmt::format("non-finite predictive draw at x = {}", xv));
        }
        band.points.push_back(p);
    }
    return band;
}

std::vector<double> value_at_risk(const PredictionBand& band) {
    std::vector<double> out;
    out.reserve(band.points.size());
    for (const auto& p : band.points) out.push_back(p.q05);
    return out;
}

Histogram beta_density(const Posterior& posterior, std::size_t bins) {
    const auto beta = posterior[Param::beta];
    if (beta.size() < 100) throw_input(fmt::format("need at least 100 draws for a density, got {}", beta.size()));
    if (bins == 0) throw_input("need at least one bin");
    auto [lo_it, hi_it] = std::minmax_element(beta.begin(), beta.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / static_cast<double>(bins);
    Histogram h;
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
    h.edges[bins] = hi;
    std::vector<std::size_t> counts(bins, 0);
    for (double b : beta) {
        auto i = static_cast<std::size_t>((b - lo) / width);
        counts[std::min(i, bins - 1)]++;
    }
    h.heights.resize(bins);
    const double total = static_cast<double>(beta.size());
    for (std::size_t i = 0; i < bins; ++i) {
        h.heights[i] = static_cast<double>(counts[i]) / (total * (h.edges[i + 1] - h.edges[i]));
    }
    return h;
}

}  // namespace trendlab::bayes
