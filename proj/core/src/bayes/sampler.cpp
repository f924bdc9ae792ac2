#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "trendlab/bayes/posterior.hpp"
#include "trendlab/error.hpp"

namespace trendlab::bayes {
namespace {

constexpr double kPriorCoefSd = 5.0;
constexpr double kPriorSigmaScale = 2.5;
constexpr double kPriorNuShape = 2.0;
constexpr double kPriorNuRate = 0.1;

// Unconstrained coordinates: alpha, beta, log sigma, log(nu - 1).
using State = std::array<double, kParamCount>;

class Target {
public:
    explicit Target(const RegressionData& d) : x_(d.x), y_(d.y) {}

    double log_likelihood(const State& s) const {
        const double sigma = std::exp(s[2]);
        const double nu = 1.0 + std::exp(s[3]);
        if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(nu)) return -INFINITY;
        const double n = static_cast<double>(x_.size());
        const double norm = std::lgamma((nu + 1.0) / 2.0) - std::lgamma(nu / 2.0) -
                            0.5 * std::log(nu * std::numbers::pi) - s[2];
        const double inv = 1.0 / (nu * sigma * sigma);
        double kernel = 0.0;
        for (std::size_t i = 0; i < x_.size(); ++i) {
            const double r = y_[i] - s[0] - s[1] * x_[i];
            kernel += std::log1p(r * r * inv);
        }
        const double ll = n * norm - (nu + 1.0) / 2.0 * kernel;
        return std::isfinite(ll) ? ll : -INFINITY;
    }

    // Log prior on the unconstrained scale, Jacobians included.
    static double log_prior(const State& s) {
        const double sigma = std::exp(s[2]);
        const double nu_minus_one = std::exp(s[3]);
        const double nu = 1.0 + nu_minus_one;
        const double coef_var = kPriorCoefSd * kPriorCoefSd;
        double lp = -(s[0] * s[0] + s[1] * s[1]) / (2.0 * coef_var);
        lp += -sigma * sigma / (2.0 * kPriorSigmaScale * kPriorSigmaScale) + s[2];
        lp += (kPriorNuShape - 1.0) * std::log(nu) - kPriorNuRate * nu + s[3];
        return lp;
    }

private:
    const std::vector<double>& x_;
    const std::vector<double>& y_;
};

struct ChainResult {
    std::array<std::vector<double>, kParamCount> draws;
    std::array<double, kParamCount> accepted{};
};

ChainResult run_chain(const Target& target, const FitConfig& cfg, std::size_t chain) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(chain), 0x5eedU};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> init(-2.0, 2.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    State s{};
    double lp = -INFINITY;
    // Stan-style dispersed initialisation on the unconstrained scale.
    for (int attempt = 0; attempt < 100 && !std::isfinite(lp); ++attempt) {
        for (auto& v : s) v = init(rng);
        lp = target.log_likelihood(s) + Target::log_prior(s);
    }
    if (!std::isfinite(lp)) throw_numeric("could not find a finite starting point");

    std::array<double, kParamCount> log_step{};
    log_step.fill(std::log(0.5));

    ChainResult out;
    for (auto& d : out.draws) d.reserve(cfg.draws);
    const std::size_t total = cfg.warmup + cfg.draws;
    for (std::size_t it = 0; it < total; ++it) {
        const bool adapting = it < cfg.warmup;
        for (std::size_t p = 0; p < kParamCount; ++p) {
            State proposal = s;
            proposal[p] += std::exp(log_step[p]) * gauss(rng);
            const double lp_new = target.log_likelihood(proposal) + Target::log_prior(proposal);
            const double log_ratio = lp_new - lp;
            const double accept_prob = std::isfinite(lp_new) ? std::min(1.0, std::exp(log_ratio)) : 0.0;
            const bool accept = unit(rng) < accept_prob;
            if (accept) {
                s = proposal;
                lp = lp_new;
            }
            if (adapting) {
                const double gain = std::pow(static_cast<double>(it + 1), -0.6);
                log_step[p] += gain * (accept_prob - cfg.target_acceptance);
            } else if (accept) {
                out.accepted[p] += 1.0;
            }
        }
        if (!adapting) {
            out.draws[0].push_back(s[0]);
            out.draws[1].push_back(s[1]);
            out.draws[2].push_back(std::exp(s[2]));
            out.draws[3].push_back(1.0 + std::exp(s[3]));
        }
    }
    for (auto& a : out.accepted) a /= static_cast<double>(std::max<std::size_t>(cfg.draws, 1));
    return out;
}

}  // namespace

std::string_view param_name(Param p) {
    switch (p) {
        case Param::alpha: return "alpha";
        case Param::beta: return "beta";
        case Param::sigma: return "sigma";
        case Param::nu: return "nu";
    }
    return "?";
}

double Posterior::max_rhat() const {
    double m = 0.0;
    for (const auto& d : diagnostics) m = std::max(m, d.rhat);
    return m;
}

double Posterior::min_ess() const {
    double m = INFINITY;
    for (const auto& d : diagnostics) m = std::min(m, d.ess);
    return m;
}

Posterior fit(const RegressionData& data, const FitConfig& config) {
    if (data.x.size() != data.y.size()) throw_input("x and y have different lengths");
    if (data.x.size() < 3) throw_input(fmt::format("need at least 3 observations, got {}", data.x.size()));
    if (config.chains < 1 || config.draws < 2) throw_input("need at least one chain and two draws");
    for (std::size_t i = 0; i < data.x.size(); ++i) {
        if (!std::isfinite(data.x[i]) || !std::isfinite(data.y[i])) {
            throw_input(fmt::format("non-finite value at observation {}", i));
        }
    }
    const auto [lo, hi] = std::minmax_element(data.x.begin(), data.x.end());
    if (*lo == *hi) throw_input("unidentifiable slope: x is constant");

    const Target target(data);
    Posterior post;
    post.chains = config.chains;
    post.draws = config.draws;
    for (auto& s : post.samples) s.reserve(config.chains * config.draws);
    for (std::size_t c = 0; c < config.chains; ++c) {
        auto chain = run_chain(target, config, c);
        for (std::size_t p = 0; p < kParamCount; ++p) {
            post.samples[p].insert(post.samples[p].end(), chain.draws[p].begin(), chain.draws[p].end());
            post.acceptance[p] += chain.accepted[p] / static_cast<double>(config.chains);
        }
    }
    for (std::size_t p = 0; p < kParamCount; ++p) post.diagnostics[p] = diagnose(post.samples[p], config.chains);
    return post;
}

}  // namespace trendlab::bayes
