#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string_view>

#include <fmt/format.h>

#include "trendlab/corpus/thematic_field.hpp"
#include "trendlab/corpus/time_series.hpp"
#include "trendlab/fixtures/fixtures.hpp"
#include "trendlab/mining/tokenize.hpp"

namespace trendlab::fixtures {

using corpus::Corpus;
using corpus::Tweet;
using namespace std::chrono;

namespace {

constexpr sys_days kStart = sys_days{year{2022} / February / 24};

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& pool) {
    return pool[rng() % pool.size()];
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::string> numbered(std::string_view stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(fmt::format("{}{:02}", stem, i));
    return out;
}

std::vector<std::string> distinct_sample(std::mt19937_64& rng, const std::vector<std::string>& pool, std::size_t k,
                                         std::string_view exclude = {}) {
    std::vector<std::string> out;
    std::sample(pool.begin(), pool.end(), std::back_inserter(out), static_cast<std::ptrdiff_t>(k + 1), rng);
    std::erase(out, std::string(exclude));
    out.resize(std::min(out.size(), k));
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

std::string random_text(std::mt19937_64& rng, const std::vector<std::string>& words, std::size_t lo, std::size_t hi) {
    const std::size_t n = uniform(rng, lo, hi);
    std::string text;
    for (std::size_t i = 0; i < n; ++i) {
        if (i) text += ' ';
        text += pick(rng, words);
    }
    return text;
}

corpus::Timestamp stamp(std::mt19937_64& rng, int day) {
    return sys_seconds{kStart + days{day}} + seconds{static_cast<long>(rng() % 86400)};
}

std::vector<std::string> hashtags_of(std::string_view text) {
    std::vector<std::string> tags;
    std::size_t pos = 0;
    while ((pos = text.find('#', pos)) != std::string_view::npos) {
        std::size_t end = pos + 1;
        while (end < text.size() && text[end] != ' ') ++end;
        if (end > pos + 1) tags.emplace_back(text.substr(pos + 1, end - pos - 1));
        pos = end;
    }
    return tags;
}

const std::vector<std::string> kNeutralWords = {
    "news",   "today",  "report", "city",    "people", "morning", "update", "market", "weather", "school",
    "road",   "photo",  "video",  "friends", "week",   "game",    "music",  "coffee", "train",   "office",
    "river",  "garden", "story",  "price",   "team",   "night",   "family", "street", "book",    "phone",
    "summer", "winter", "lunch",  "movie",   "park",   "doctor",  "shop",   "bridge", "ticket",  "island",
    "health", "energy", "travel", "season",  "local",  "council", "votes",  "plans"};

}  // namespace

Corpus planted_username_corpus(std::size_t n, std::uint64_t seed, const std::string& id_prefix) {
    std::mt19937_64 rng(seed);
    const auto authors = numbered("author", 24);
    const auto users = numbered("user", 60);
    Corpus out;
    for (std::size_t i = 0; i < n; ++i) {
        const bool fake = i % 2 == 1;
        Tweet t;
        t.id = fmt::format("{}{:05}", id_prefix, i);
        t.created_at = stamp(rng, static_cast<int>(i % 30));
        t.text = random_text(rng, kNeutralWords, 6, 10);
        t.author = pick(rng, authors);
        // both classes draw the same number of retweeters
        const std::size_t k = uniform(rng, 5, 8);
        t.retweeters = distinct_sample(rng, users, fake ? k - 1 : k);
        if (fake) t.retweeters.insert(t.retweeters.begin() + static_cast<std::ptrdiff_t>(rng() % k), kPlantedUsername);
        t.retweet_count = static_cast<std::int64_t>(t.retweeters.size() + rng() % 20);
        t.label = fake ? "fake" : "genuine";
        out.tweets.push_back(std::move(t));
    }
    return out;
}

Corpus overfit_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto users = numbered("reader", 20);
    const auto authors = numbered("writer", 8);
    std::set<std::string> seen;
    Corpus out;
    for (std::size_t i = 0; i < 32; ++i) {
        std::string text;
        do text = random_text(rng, kNeutralWords, 5, 9);
        while (!seen.insert(text).second);
        Tweet t;
        t.id = fmt::format("o{:03}", i);
        t.created_at = stamp(rng, static_cast<int>(i));
        t.text = std::move(text);
        t.author = pick(rng, authors);
        t.retweeters = distinct_sample(rng, users, uniform(rng, 3, 6));
        t.retweet_count = static_cast<std::int64_t>(5 + rng() % 40);
        t.label = i % 2 ? "fake" : "genuine";
        out.tweets.push_back(std::move(t));
    }
    return out;
}

Corpus generated_text_corpus(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<std::string> human = {"lol",  "just", "my",    "omg",  "cant", "believe", "today",
                                            "love", "this", "guys",  "tbh",  "so",   "tired",   "coffee",
                                            "ugh",  "haha", "going", "home", "weekend", "really"};
    const std::vector<std::string> gpt2 = {"furthermore", "significant", "according", "experts", "indicate",
                                           "however",     "the",         "situation", "remains",  "complex",
                                           "therefore",   "analysis",    "suggests",  "broader",  "implications"};
    const std::vector<std::string> rnn = {"the", "news", "is", "the", "war", "of", "the", "news", "and", "news"};
    const std::vector<std::string> other = {"click", "subscribe", "promo", "free",   "giveaway", "link",
                                            "bio",   "follow",    "win",   "prize", "limited",  "offer"};
    const auto users = numbered("acct", 40);
    std::discrete_distribution<int> mix({80.0, 10.0, 5.0, 5.0});
    Corpus out;
    for (std::size_t i = 0; i < n; ++i) {
        const int kind = mix(rng);
        Tweet t;
        t.id = fmt::format("g{:05}", i);
        t.created_at = stamp(rng, static_cast<int>(i % 30));
        switch (kind) {
            case 0: t.text = random_text(rng, human, 5, 12); t.label = "human"; break;
            case 1: t.text = random_text(rng, gpt2, 10, 18); t.label = "gpt2"; break;
            case 2: t.text = random_text(rng, rnn, 8, 14); t.label = "rnn"; break;
            default: t.text = random_text(rng, other, 4, 8); t.label = "other"; break;
        }
        // shared filler keeps the classes from being separable by a single word
        t.text += ' ' + pick(rng, kNeutralWords);
        t.author = pick(rng, users);
        t.retweeters = distinct_sample(rng, users, uniform(rng, 1, 4), t.author);
        t.retweet_count = static_cast<std::int64_t>(5 + rng() % 50);
        out.tweets.push_back(std::move(t));
    }
    return out;
}

namespace {

struct Template {
    std::string_view text;
    bool fake;
};

const std::array<Template, 5> kUkraine = {{
    {"Ukraine army holds the line near Kyiv as shelling continues", false},
    {"Russian troops shell Kharkiv, Ukraine asks for air defence", false},
    {"Putin claims Ukraine is run by nazis and needs denazification", false},
    {"Ukraine nazi battalions are everywhere and the media calls it fake", true},
    {"Denazification of Ukraine is the only way, the nazi regime must fall", true},
}};

const std::array<Template, 5> kBio = {{
    {"Secret US bio weapon labs in Ukraine exposed", true},
    {"Migrating birds carry bio weapon viruses from Ukraine labs", true},
    {"The bird flu is a bio weapon test, wake up #biolabs", true},
    {"Fact check: the bio weapon labs in Ukraine story is fake", false},
    {"WHO asks Ukraine labs to destroy pathogens to prevent bio leaks", false},
}};

const std::array<Template, 4> kFood = {{
    {"McDonalds closes all restaurants in Russia over the Ukraine war", false},
    {"McDonalds shares fall after the Russia exit #MCD", false},
    {"Sanctions hit McDonalds, Coca-Cola and Starbucks in Russia", false},
    {"Russians queue for the last Big Mac as McDonalds leaves", false},
}};

const std::vector<std::string> kTails = {"", "", " today", " again", " breaking", " #StandWithUkraine", " update"};

// topic weights by day: war news throughout, bio-lab story mid-month, fast food around March 8
std::array<double, 3> topic_weights(int day) {
    const double bio = day >= 8 && day <= 22 ? 3.0 : 0.6;
    const double food = day >= 11 && day <= 16 ? 4.0 : 0.4;
    return {4.0, bio, food};
}

}  // namespace

Corpus demo_corpus() {
    std::mt19937_64 rng(2022);
    const auto left = numbered("kyiv_watch", 12);
    const auto right = numbered("truth_seeker", 12);
    const auto bots = numbered("bot_ring", 5);
    Corpus out;
    std::size_t next_id = 1;
    for (int day = 0; day < 30; ++day) {
        const std::size_t per_day = uniform(rng, 8, 16);
        const auto w = topic_weights(day);
        std::discrete_distribution<int> topic(w.begin(), w.end());
        for (std::size_t k = 0; k < per_day; ++k) {
            const int which = topic(rng);
            const Template& tpl = which == 0   ? kUkraine[rng() % kUkraine.size()]
                                  : which == 1 ? kBio[rng() % kBio.size()]
                                               : kFood[rng() % kFood.size()];
            Tweet t;
            t.id = fmt::format("demo{:05}", next_id++);
            t.created_at = stamp(rng, day);
            t.text = std::string(tpl.text) + pick(rng, kTails);
            t.hashtags = hashtags_of(t.text);
            // fake stories come from the right-hand community, genuine ones from the left
            const auto& home = tpl.fake ? right : left;
            const auto& away = tpl.fake ? left : right;
            t.author = pick(rng, home);
            const std::size_t reach = uniform(rng, 1, 8);
            for (const auto& u : distinct_sample(rng, home, reach, t.author)) t.retweeters.push_back(u);
            if (rng() % 10 == 0) t.retweeters.push_back(pick(rng, away));
            t.retweet_count = static_cast<std::int64_t>(t.retweeters.size() + rng() % 12);
            if (t.retweet_count >= 5) t.label = tpl.fake ? "fake" : "genuine";
            out.tweets.push_back(std::move(t));
        }
        if (day % 2 == 0) {
            // the bot ring only amplifies itself
            Tweet t;
            t.id = fmt::format("demo{:05}", next_id++);
            t.created_at = stamp(rng, day);
            t.text = std::string(kBio[rng() % 3].text) + " #biolabs";
            t.hashtags = hashtags_of(t.text);
            t.author = pick(rng, bots);
            t.retweeters = distinct_sample(rng, bots, 3, t.author);
            t.retweet_count = static_cast<std::int64_t>(t.retweeters.size() + 40 + rng() % 30);
            t.label = "fake";
            out.tweets.push_back(std::move(t));
        }
    }
    std::stable_sort(out.tweets.begin(), out.tweets.end(),
                     [](const Tweet& a, const Tweet& b) { return a.created_at < b.created_at; });
    return out;
}

std::string demo_fields() {
    return "# name: (alternatives) required-keyword ...\n"
           "ukraine_nazi: ukraine (nazi OR nazis OR denazification)\n"
           "bioweapon: (bio OR biological) (weapon OR weapons OR lab OR labs)\n"
           "mcdonalds: (mcdonalds OR \"big mac\" OR mcd)\n";
}

corpus::PriceSeries demo_prices() {
    const Corpus tweets = demo_corpus();
    const auto field = corpus::parse_thematic_field("mcdonalds: (mcdonalds OR \"big mac\" OR mcd)");
    const auto counts = corpus::count_time_series(tweets, field, kStart, kStart + days{29});
    std::mt19937_64 rng(5);
    std::normal_distribution<double> noise(0.0, 0.8);
    corpus::PriceSeries prices;
    double level = 247.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const weekday wd{counts.day(i)};
        if (wd == Saturday || wd == Sunday) continue;
        level += 0.15 + noise(rng);
        const double close = level - 1.2 * counts.values[i];
        prices.entries.push_back({counts.day(i), std::round(close * 100.0) / 100.0});
    }
    return prices;
}

}  // namespace trendlab::fixtures

namespace trendlab::fixtures {

Corpus corpus_from_graph(const graphx::UserGraph& graph) {
    Corpus out;
    std::size_t next_id = 1;
    for (graphx::Vertex v = 0; v < graph.vertex_count(); ++v) {
        std::int64_t rounds = 0;
        for (const auto& arc : graph.in_arcs(v)) rounds = std::max(rounds, arc.weight);
        for (std::int64_t r = 0; r < rounds; ++r) {
            Tweet t;
            t.id = fmt::format("graph{:05}", next_id);
            t.created_at = sys_seconds{kStart} + seconds{static_cast<long>(next_id)};
            ++next_id;
            t.text = fmt::format("post {} by {}", r, graph.name(v));
            t.author = graph.name(v);
            for (const auto& arc : graph.in_arcs(v)) {
                if (arc.weight > r) t.retweeters.push_back(graph.name(arc.target));
            }
            t.retweet_count = static_cast<std::int64_t>(t.retweeters.size());
            out.tweets.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace trendlab::fixtures
