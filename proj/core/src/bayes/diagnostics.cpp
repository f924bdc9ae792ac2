#include <algorithm>
#include <cmath>

#include "trendlab/bayes/posterior.hpp"
#include "trendlab/error.hpp"

namespace trendlab::bayes {

Diagnostics diagnose(std::span<const double> draws, std::size_t chains) {
    if (chains == 0 || draws.size() % chains != 0) throw_input("draw count is not a multiple of the chain count");
    const std::size_t per_chain = draws.size() / chains;
    const std::size_t n = per_chain / 2;
    if (n < 2) throw_input("too few draws for diagnostics");

    // Split every chain into two halves.
    std::vector<std::span<const double>> parts;
    for (std::size_t c = 0; c < chains; ++c) {
        parts.push_back(draws.subspan(c * per_chain, n));
        parts.push_back(draws.subspan(c * per_chain + per_chain - n, n));
    }
    const std::size_t m = parts.size();
    const double nd = static_cast<double>(n);
    std::vector<double> means(m);
    std::vector<double> vars(m);
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (double v : parts[j]) s += v;
        means[j] = s / nd;
        double ss = 0.0;
        for (double v : parts[j]) ss += (v - means[j]) * (v - means[j]);
        vars[j] = ss / (nd - 1.0);
    }
    double grand = 0.0;
    for (double mu : means) grand += mu;
    grand /= static_cast<double>(m);
    double between = 0.0;
    for (double mu : means) between += (mu - grand) * (mu - grand);
    between *= nd / (static_cast<double>(m) - 1.0);
    double within = 0.0;
    for (double v : vars) within += v;
    within /= static_cast<double>(m);

    Diagnostics d;
    if (within <= 0.0) {
        // Frozen chains: identical everywhere means converged but uninformative.
        d.rhat = between > 0.0 ? INFINITY : 1.0;
        d.ess = 1.0;
        return d;
    }
    const double var_plus = (nd - 1.0) / nd * within + between / nd;
    d.rhat = std::sqrt(var_plus / within);

    // Autocorrelation combined across chains, truncated by Geyer's initial
    // monotone sequence.
    auto rho = [&](std::size_t lag) {
        double acov = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t t = 0; t + lag < n; ++t) {
                s += (parts[j][t] - means[j]) * (parts[j][t + lag] - means[j]);
            }
            acov += s / nd;
        }
        acov /= static_cast<double>(m);
        return 1.0 - (within - acov) / var_plus;
    };
    double tau = -1.0;
    double prev_pair = INFINITY;
    for (std::size_t t = 0; t + 1 < n; t += 2) {
        double pair = rho(t) + rho(t + 1);
        if (pair <= 0.0) break;
        pair = std::min(pair, prev_pair);
        prev_pair = pair;
        tau += 2.0 * pair;
    }
    tau = std::max(tau, 1.0 / std::log10(static_cast<double>(m) * nd));
    d.ess = static_cast<double>(m) * nd / tau;
    return d;
}

double sorted_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw_input("quantile of an empty sample");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

ParameterSummary summarize(std::span<const double> draws) {
    if (draws.empty()) throw_input("cannot summarize zero draws");
    std::vector<double> sorted(draws.begin(), draws.end());
    std::sort(sorted.begin(), sorted.end());
    ParameterSummary s;
    for (double v : draws) s.mean += v;
    s.mean /= static_cast<double>(draws.size());
    double ss = 0.0;
    for (double v : draws) ss += (v - s.mean) * (v - s.mean);
    s.sd = draws.size() > 1 ? std::sqrt(ss / static_cast<double>(draws.size() - 1)) : 0.0;
    s.q01 = sorted_quantile(sorted, 0.01);
    s.q05 = sorted_quantile(sorted, 0.05);
    s.q50 = sorted_quantile(sorted, 0.50);
    s.q95 = sorted_quantile(sorted, 0.95);
    s.q99 = sorted_quantile(sorted, 0.99);
    return s;
}

}  // namespace trendlab::bayes
