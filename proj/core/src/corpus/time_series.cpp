#include "trendlab/corpus/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "trendlab/error.hpp"

namespace trendlab::corpus {

CountTimeSeries count_time_series(const Corpus& corpus, const ThematicField& field) {
    if (corpus.empty()) throw_input("empty corpus");
    std::map<Day, double> counts;
    for (const auto& t : corpus.tweets) {
        if (field.matches(t.text)) counts[t.day()] += 1.0;
    }
    if (counts.empty()) throw_input(fmt::format("empty trend for field '{}'", field.name()));
    CountTimeSeries out;
    out.start_day = counts.begin()->first;
    out.values.assign(static_cast<std::size_t>((counts.rbegin()->first - out.start_day).count()) + 1, 0.0);
    for (const auto& [day, n] : counts) {
        out.values[static_cast<std::size_t>((day - out.start_day).count())] = n;
    }
    return out;
}

CountTimeSeries count_time_series(const Corpus& corpus, const ThematicField& field, Day first, Day last) {
    if (last < first) throw_input("day range is reversed");
    CountTimeSeries out;
    out.start_day = first;
    out.values.assign(static_cast<std::size_t>((last - first).count()) + 1, 0.0);
    for (const auto& t : corpus.tweets) {
        const Day d = t.day();
        if (d < first || d > last || !field.matches(t.text)) continue;
        out.values[static_cast<std::size_t>((d - first).count())] += 1.0;
    }
    return out;
}

std::vector<double> rolling_mean(std::span<const double> values, std::size_t window) {
    if (window == 0) throw_input("rolling window must be at least 1");
    std::vector<double> out(values.size());
    // Recompute each window directly; running sums drift on long series.
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::size_t lo = i + 1 >= window ? i + 1 - window : 0;
        double sum = 0.0;
        for (std::size_t j = lo; j <= i; ++j) sum += values[j];
        out[i] = sum / static_cast<double>(i - lo + 1);
    }
    return out;
}

CountTimeSeries rolling_mean(const CountTimeSeries& series, std::size_t window) {
    return CountTimeSeries{series.start_day, rolling_mean(series.values, window)};
}

std::vector<double> zscore(std::span<const double> values) {
    if (values.size() < 2) throw_input("zero variance: need at least two values");
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / n);
    if (!(sd > 0.0) || sd <= 1e-300 || sd < std::abs(mean) * 1e-14) throw_input("zero variance");
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - mean) / sd;
    return out;
}

CountTimeSeries zscore(const CountTimeSeries& series) {
    return CountTimeSeries{series.start_day, zscore(std::span<const double>(series.values))};
}

AlignedSeries align_for_regression(const CountTimeSeries& tweets, const PriceSeries& prices) {
    if (tweets.values.empty() || prices.entries.empty()) throw_input("cannot align empty series");
    AlignedSeries out;
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& p : prices.entries) {
        if (p.date < tweets.start_day || p.date > tweets.last_day()) continue;
        out.dates.push_back(p.date);
        x.push_back(tweets.values[static_cast<std::size_t>((p.date - tweets.start_day).count())]);
        y.push_back(p.close);
    }
    if (out.dates.size() < 3) {
        throw_input(fmt::format("need at least 3 common dates between tweets and prices, found {}",
                                out.dates.size()));
    }
    out.data.x = zscore(std::span<const double>(x));
    out.data.y = zscore(std::span<const double>(y));
    return out;
}

}  // namespace trendlab::corpus
