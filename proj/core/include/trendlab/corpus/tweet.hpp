#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trendlab::corpus {

using Timestamp = std::chrono::sys_seconds;
using Day = std::chrono::sys_days;

struct Tweet {
    std::string id;
    Timestamp created_at{};
    std::string text;
    std::string author;
    std::vector<std::string> retweeters;
    std::vector<std::string> hashtags;
    std::int64_t retweet_count = 0;
    std::optional<std::string> label;

    Day day() const { return std::chrono::floor<std::chrono::days>(created_at); }
};

/// Tweets in input order. Immutable once loaded.
struct Corpus {
    std::vector<Tweet> tweets;

    bool empty() const { return tweets.empty(); }
    std::size_t size() const { return tweets.size(); }
};

/// Parses ISO-8601 timestamps: a date, optionally followed by 'T' or ' ', a
/// time with optional fractional seconds (truncated), and an optional 'Z' or
/// +hh:mm / +hhmm offset. Offsets are folded into UTC.
Timestamp parse_timestamp(std::string_view text);

/// Parses the leading YYYY-MM-DD of `text`; anything after the date is ignored.
Day parse_date(std::string_view text);
std::string format_date(Day day);

/// One JSON object per line. Blank lines are skipped; a malformed line or a
/// duplicate id raises InputError naming the 1-based line number.
Corpus parse_corpus(std::istream& in);
Corpus load_corpus(const std::filesystem::path& path);

/// Serializes in the same line-delimited schema parse_corpus() reads.
void write_corpus(std::ostream& out, const Corpus& corpus);

}  // namespace trendlab::corpus
