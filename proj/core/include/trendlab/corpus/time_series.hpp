#pragma once

#include <span>
#include <vector>

#include "trendlab/bayes/regression_data.hpp"
#include "trendlab/corpus/prices.hpp"
#include "trendlab/corpus/thematic_field.hpp"
#include "trendlab/corpus/tweet.hpp"

namespace trendlab::corpus {

/// One value per consecutive UTC day starting at `start_day`.
struct CountTimeSeries {
    Day start_day{};
    std::vector<double> values;

    Day day(std::size_t i) const { return start_day + std::chrono::days{static_cast<int>(i)}; }
    Day last_day() const { return day(values.size() - 1); }
    std::size_t size() const { return values.size(); }
};

/// Daily counts of tweets matching `field`, from the earliest to the latest
/// matching tweet. Throws InputError("empty trend") when nothing matches.
CountTimeSeries count_time_series(const Corpus& corpus, const ThematicField& field);

/// Same, over the fixed inclusive range [first, last]; matches outside the range
/// are ignored. An all-zero series is allowed here.
CountTimeSeries count_time_series(const Corpus& corpus, const ThematicField& field, Day first, Day last);

/// Trailing mean with a partially filled head: out[i] = mean(v[max(0, i-w+1) ..= i]).
CountTimeSeries rolling_mean(const CountTimeSeries& series, std::size_t window);
std::vector<double> rolling_mean(std::span<const double> values, std::size_t window);

/// (x - mean) / population sd. Throws InputError("zero variance") for constant
/// input and for fewer than two values.
CountTimeSeries zscore(const CountTimeSeries& series);
std::vector<double> zscore(std::span<const double> values);

struct AlignedSeries {
    std::vector<Day> dates;
    bayes::RegressionData data;
};

/// Inner join on dates present in both series, then z-scores each column.
/// x is the tweet series, y the closing price. Needs at least 3 common dates.
AlignedSeries align_for_regression(const CountTimeSeries& tweets, const PriceSeries& prices);

}  // namespace trendlab::corpus
