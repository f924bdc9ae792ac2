#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "commands.hpp"
#include "output.hpp"
#include "trendlab/corpus/time_series.hpp"
#include "trendlab/error.hpp"

namespace trendlab::cli {

corpus::ThematicField select_field(const std::string& fields_path, const std::string& name) {
    const auto fields = corpus::load_thematic_fields(fields_path);
    if (name.empty()) {
        if (fields.size() != 1) {
            throw_input(fmt::format("'{}' defines {} fields; pick one with --field", fields_path, fields.size()));
        }
        return fields.front();
    }
    for (const auto& f : fields) {
        if (f.name() == name) return f;
    }
    throw_input(fmt::format("no field named '{}' in '{}'", name, fields_path));
}

void run_trends(const TrendsOptions& o, std::ostream& out) {
    if (o.window == 0) throw_input("--window must be at least 1");
    const auto tweets = corpus::load_corpus(o.common.corpus);
    if (tweets.empty()) throw_input("corpus is empty");
    const auto fields = corpus::load_thematic_fields(o.fields);
    if (fields.empty()) throw_input(fmt::format("no fields in '{}'", o.fields));
    const auto dir = prepare_out_dir(o.common.out);

    const auto [lo, hi] = std::minmax_element(tweets.tweets.begin(), tweets.tweets.end(),
                                              [](const auto& a, const auto& b) { return a.day() < b.day(); });
    const corpus::Day first = lo->day();
    const corpus::Day last = hi->day();

    std::set<std::string> stems;
    for (const auto& field : fields) {
        const std::string stem = file_stem(field.name());
        if (!stems.insert(stem).second) throw_input(fmt::format("two fields map to the file name 'trend_{}.csv'", stem));
        const auto counts = corpus::count_time_series(tweets, field, first, last);
        if (std::all_of(counts.values.begin(), counts.values.end(), [](double v) { return v == 0.0; })) {
            throw_input(fmt::format("field '{}': empty trend", field.name()));
        }
        const auto rolling = corpus::rolling_mean(counts, o.window);
        corpus::CountTimeSeries z;
        try {
            z = corpus::zscore(rolling);
        } catch (const InputError& e) {
            throw_input(fmt::format("field '{}': {}", field.name(), e.what()));
        }
        CsvText csv({"date", "count", "rolling_mean", "zscore"});
        for (std::size_t i = 0; i < counts.size(); ++i) {
            csv.row({corpus::format_date(counts.day(i)), num(counts.values[i]), num(rolling.values[i]), num(z.values[i])});
        }
        const auto path = dir / fmt::format("trend_{}.csv", stem);
        write_file(path, csv.str());
        out << fmt::format("{}: {} days, {} matching tweets -> {}\n", field.name(), counts.size(),
                           static_cast<long>(std::accumulate(counts.values.begin(), counts.values.end(), 0.0)),
                           path.filename().string());
    }
}

}  // namespace trendlab::cli
