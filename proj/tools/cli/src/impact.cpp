#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "commands.hpp"
#include "output.hpp"
#include "trendlab/bayes/posterior.hpp"
#include "trendlab/bayes/prediction.hpp"
#include "trendlab/corpus/prices.hpp"
#include "trendlab/corpus/time_series.hpp"
#include "trendlab/error.hpp"

namespace trendlab::cli {

inline constexpr double kRhatWarning = 1.1;

void run_impact(const ImpactOptions& o, std::ostream& out, std::ostream& err) {
    if (o.window == 0) throw_input("--window must be at least 1");
    if (o.chains < 2) throw_input("--chains must be at least 2 for R-hat");
    if (o.draws < 50) throw_input("--draws must be at least 50");
    const auto tweets = corpus::load_corpus(o.common.corpus);
    if (tweets.empty()) throw_input("corpus is empty");
    const auto field = select_field(o.fields, o.field);
    const auto prices = corpus::load_prices(o.prices);

    const auto counts = corpus::count_time_series(tweets, field);
    const auto rolling = corpus::rolling_mean(counts, o.window);
    const auto aligned = corpus::align_for_regression(rolling, prices);

    bayes::FitConfig fc;
    fc.chains = o.chains;
    fc.draws = o.draws;
    fc.warmup = o.warmup;
    fc.seed = o.seed;
    const auto post = bayes::fit(aligned.data, fc);
    std::vector<double> grid(aligned.data.x.begin(), aligned.data.x.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const auto band = bayes::predict_bands(post, grid, o.seed);
    const auto density = bayes::beta_density(post, o.bins);

    const auto dir = prepare_out_dir(o.common.out);

    CsvText bands({"x", "mean", "q01", "q05", "q95", "q99"});
    for (const auto& p : band.points) bands.row({num(p.x), num(p.mean), num(p.q01), num(p.q05), num(p.q95), num(p.q99)});
    write_file(dir / "bands.csv", bands.str());

    CsvText data({"date", "x", "y"});
    for (std::size_t i = 0; i < aligned.dates.size(); ++i) {
        data.row({corpus::format_date(aligned.dates[i]), num(aligned.data.x[i]), num(aligned.data.y[i])});
    }
    write_file(dir / "aligned.csv", data.str());

    CsvText hist({"left", "right", "density"});
    for (std::size_t i = 0; i < density.heights.size(); ++i) {
        hist.row({num(density.edges[i]), num(density.edges[i + 1]), num(density.heights[i])});
    }
    write_file(dir / "beta_density.csv", hist.str());

    const double max_rhat = post.max_rhat();
    const bool warn = !(max_rhat <= kRhatWarning);
    Json params;
    for (std::size_t k = 0; k < bayes::kParamCount; ++k) {
        const auto p = static_cast<bayes::Param>(k);
        const auto s = bayes::summarize(post[p]);
        params[std::string(bayes::param_name(p))] = {
            {"mean", s.mean}, {"sd", s.sd},   {"q01", s.q01},
            {"q05", s.q05},   {"q50", s.q50}, {"q95", s.q95},
            {"q99", s.q99},   {"rhat", post.diagnostic(p).rhat}, {"ess", post.diagnostic(p).ess},
            {"acceptance", post.acceptance[k]}};
    }
    Json report;
    report["field"] = field.name();
    report["observations"] = aligned.data.size();
    report["first_date"] = corpus::format_date(aligned.dates.front());
    report["last_date"] = corpus::format_date(aligned.dates.back());
    report["window"] = o.window;
    report["scale"] = "z-score";
    report["sampler"] = {{"chains", o.chains}, {"draws", o.draws}, {"warmup", o.warmup}, {"seed", o.seed}};
    report["parameters"] = params;
    report["max_rhat"] = max_rhat;
    report["min_ess"] = post.min_ess();
    report["rhat_warning"] = warn;
    write_json(dir / "fit.json", report);

    if (warn) err << fmt::format("warning: max R-hat {:.3f} exceeds {}; chains have not mixed\n", max_rhat, kRhatWarning);
    const auto beta = bayes::summarize(post[bayes::Param::beta]);
    out << fmt::format("{}: {} days, beta = {:.4f} (sd {:.4f}), max R-hat {:.4f}\n", field.name(),
                       aligned.data.size(), beta.mean, beta.sd, max_rhat);
}

}  // namespace trendlab::cli
