#include "trendlab/corpus/tweet.hpp"

#include <charconv>
#include <fstream>
#include <unordered_set>

#include <fmt/format.h>
#include <json.hpp>

#include "trendlab/error.hpp"

namespace trendlab::corpus {
namespace {

using nlohmann::json;

int read_int(std::string_view text, std::size_t& pos, std::size_t digits, std::string_view whole) {
    if (pos + digits > text.size()) throw_input(fmt::format("bad timestamp '{}'", whole));
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + digits, value);
    if (ec != std::errc{} || ptr != text.data() + pos + digits) {
        throw_input(fmt::format("bad timestamp '{}'", whole));
    }
    pos += digits;
    return value;
}

void expect(std::string_view text, std::size_t& pos, char c, std::string_view whole) {
    if (pos >= text.size() || text[pos] != c) throw_input(fmt::format("bad timestamp '{}'", whole));
    ++pos;
}

Day parse_date_prefix(std::string_view text, std::size_t& pos) {
    using namespace std::chrono;
    const int y = read_int(text, pos, 4, text);
    expect(text, pos, '-', text);
    const int m = read_int(text, pos, 2, text);
    expect(text, pos, '-', text);
    const int d = read_int(text, pos, 2, text);
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) throw_input(fmt::format("invalid calendar date '{}'", text));
    return sys_days{ymd};
}

std::string trimmed(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string required_string(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw_input(fmt::format("missing field '{}'", key));
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return std::to_string(it->get<std::int64_t>());
    throw_input(fmt::format("field '{}' must be a string", key));
}

std::vector<std::string> string_array(const json& obj, const char* key, bool usernames) {
    std::vector<std::string> out;
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return out;
    if (!it->is_array()) throw_input(fmt::format("field '{}' must be an array", key));
    for (const auto& v : *it) {
        if (!v.is_string()) throw_input(fmt::format("field '{}' must hold strings", key));
        std::string s = usernames ? trimmed(v.get<std::string>()) : v.get<std::string>();
        if (usernames && s.empty()) throw_input(fmt::format("empty username in '{}'", key));
        out.push_back(std::move(s));
    }
    return out;
}

Tweet tweet_from_json(const json& obj) {
    if (!obj.is_object()) throw_input("record is not a JSON object");
    Tweet t;
    t.id = required_string(obj, "id");
    if (t.id.empty()) throw_input("empty id");
    t.created_at = parse_timestamp(required_string(obj, "created_at"));
    auto text = obj.find("text");
    if (text == obj.end()) throw_input("missing field 'text'");
    if (!text->is_string()) throw_input("field 'text' must be a string");
    t.text = text->get<std::string>();
    t.author = trimmed(required_string(obj, "author"));
    if (t.author.empty()) throw_input("empty author");
    t.retweeters = string_array(obj, "retweeters", true);
    t.hashtags = string_array(obj, "hashtags", false);
    if (auto rc = obj.find("retweet_count"); rc != obj.end() && !rc->is_null()) {
        if (!rc->is_number_integer()) throw_input("field 'retweet_count' must be an integer");
        t.retweet_count = rc->get<std::int64_t>();
        if (t.retweet_count < 0) throw_input("negative retweet_count");
    }
    if (auto lb = obj.find("label"); lb != obj.end() && !lb->is_null()) {
        if (!lb->is_string()) throw_input("field 'label' must be a string");
        t.label = lb->get<std::string>();
    }
    return t;
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
    using namespace std::chrono;
    std::size_t pos = 0;
    const Day day = parse_date_prefix(text, pos);
    if (pos == text.size()) return Timestamp{day};
    if (text[pos] != 'T' && text[pos] != 't' && text[pos] != ' ') {
        throw_input(fmt::format("bad timestamp '{}'", text));
    }
    ++pos;
    const int hh = read_int(text, pos, 2, text);
    expect(text, pos, ':', text);
    const int mm = read_int(text, pos, 2, text);
    int ss = 0;
    if (pos < text.size() && text[pos] == ':') {
        ++pos;
        ss = read_int(text, pos, 2, text);
    }
    if (hh > 23 || mm > 59 || ss > 60) throw_input(fmt::format("bad time of day '{}'", text));
    if (pos < text.size() && (text[pos] == '.' || text[pos] == ',')) {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    }
    seconds offset{0};
    if (pos < text.size()) {
        const char c = text[pos];
        if (c == 'Z' || c == 'z') {
            ++pos;
        } else if (c == '+' || c == '-') {
            ++pos;
            const int oh = read_int(text, pos, 2, text);
            if (pos < text.size() && text[pos] == ':') ++pos;
            const int om = read_int(text, pos, 2, text);
            offset = hours{oh} + minutes{om};
            if (c == '-') offset = -offset;
        }
    }
    if (pos != text.size()) throw_input(fmt::format("bad timestamp '{}'", text));
    return Timestamp{day} + hours{hh} + minutes{mm} + seconds{ss} - offset;
}

Day parse_date(std::string_view text) {
    std::size_t pos = 0;
    return parse_date_prefix(text, pos);
}

std::string format_date(Day day) {
    const std::chrono::year_month_day ymd{day};
    return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(ymd.year()),
                       static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
}

Corpus parse_corpus(std::istream& in) {
    Corpus corpus;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Tweet tweet;
        try {
            tweet = tweet_from_json(json::parse(line));
        } catch (const json::exception& e) {
            throw InputError(fmt::format("line {}: invalid JSON: {}", line_no, e.what()));
        } catch (const InputError& e) {
            throw InputError(fmt::format("line {}: {}", line_no, e.what()));
        }
        if (!ids.insert(tweet.id).second) {
            throw InputError(fmt::format("line {}: duplicate id '{}'", line_no, tweet.id));
        }
        corpus.tweets.push_back(std::move(tweet));
    }
    return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw_input(fmt::format("cannot open corpus file '{}'", path.string()));
    return parse_corpus(in);
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
    for (const auto& t : corpus.tweets) {
        const auto secs = t.created_at - std::chrono::floor<std::chrono::days>(t.created_at);
        const auto hms = std::chrono::hh_mm_ss<std::chrono::seconds>(secs);
        json obj = {
            {"id", t.id},
            {"created_at", fmt::format("{}T{:02d}:{:02d}:{:02d}Z", format_date(t.day()), hms.hours().count(),
                                       hms.minutes().count(), hms.seconds().count())},
            {"text", t.text},
            {"author", t.author},
            {"retweeters", t.retweeters},
            {"hashtags", t.hashtags},
            {"retweet_count", t.retweet_count},
        };
        if (t.label) obj["label"] = *t.label;
        out << obj.dump() << '\n';
    }
}

}  // namespace trendlab::corpus
