#include "trendlab/neural/dataset.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "trendlab/error.hpp"
#include "trendlab/mining/tokenize.hpp"

namespace trendlab::neural {
namespace {

std::vector<std::string> bag_usernames(const corpus::Tweet& t) {
    std::vector<std::string> users;
    users.reserve(t.retweeters.size() + 1);
    users.push_back(t.author);
    users.insert(users.end(), t.retweeters.begin(), t.retweeters.end());
    return users;
}

}  // namespace

DatasetEncoder DatasetEncoder::fit(std::span<const corpus::Tweet> tweets, const EncoderOptions& options,
                                   std::vector<std::string> classes) {
    if (tweets.empty()) throw_input("cannot fit an encoder on zero tweets");
    if (options.max_len == 0) throw_input("max_len must be positive");
    DatasetEncoder enc;
    enc.max_len = options.max_len;

    std::vector<std::vector<std::string>> words;
    std::vector<std::vector<std::string>> users;
    std::vector<std::vector<std::string>> retweeters;
    std::set<std::string> labels;
    for (const auto& t : tweets) {
        words.push_back(mining::token_sequence(t.text));
        users.push_back(bag_usernames(t));
        retweeters.push_back(t.retweeters);
        if (t.label) labels.insert(*t.label);
    }
    enc.vocab = TokenVocab::build(words, users);

    if (classes.empty()) {
        classes.assign(labels.begin(), labels.end());
    } else {
        for (const auto& l : labels) {
            if (std::find(classes.begin(), classes.end(), l) == classes.end()) {
                throw_input(fmt::format("label '{}' is not among the configured classes", l));
            }
        }
    }
    if (classes.size() < 2) {
        throw_input(fmt::format("need at least two classes, found {}", classes.size()));
    }
    enc.classes = std::move(classes);

    auto tfidf = features::build_tfidf(retweeters, features::VocabIndex::from_documents(retweeters));
    enc.tfidf = std::move(tfidf.model);
    const std::size_t cap = std::min(tfidf.matrix.rows(), tfidf.matrix.cols());
    const std::size_t k = std::min(options.svd_k, cap);
    if (k > 0) enc.svd = features::truncated_svd(tfidf.matrix, k, options.seed);
    return enc;
}

Example DatasetEncoder::encode(const corpus::Tweet& tweet) const {
    Example ex;
    const auto words = mining::token_sequence(tweet.text);
    const std::size_t n = std::min(words.size(), max_len);
    ex.tokens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ex.tokens.push_back(vocab.word_id(words[i]));
    ex.bag.reserve(words.size() + tweet.retweeters.size() + 1);
    for (const auto& w : words) ex.bag.push_back(vocab.word_id(w));
    for (const auto& u : bag_usernames(tweet)) ex.bag.push_back(vocab.username_id(u));
    if (svd) {
        const auto row = tfidf.transform(tweet.retweeters);
        ex.svd = features::project(row, tfidf.vocab.size(), *svd);
    }
    if (tweet.label) ex.label = class_index(*tweet.label);
    return ex;
}

int DatasetEncoder::class_index(std::string_view label) const {
    auto it = std::find(classes.begin(), classes.end(), label);
    if (it == classes.end()) throw_input(fmt::format("unknown class label '{}'", label));
    return static_cast<int>(it - classes.begin());
}

ModelConfig DatasetEncoder::model_config() const {
    ModelConfig c;
    c.vocab_size = vocab.size();
    c.max_len = max_len;
    c.classes = classes.size();
    c.svd_dim = svd_dim();
    c.use_svd = svd.has_value();
    return c;
}

std::vector<corpus::Tweet> select_training_tweets(const corpus::Corpus& corpus, std::int64_t min_retweets) {
    std::vector<corpus::Tweet> out;
    for (const auto& t : corpus.tweets) {
        if (t.label && t.retweet_count >= min_retweets) out.push_back(t);
    }
    return out;
}

std::vector<Example> prepare_dataset(const corpus::Corpus& corpus, std::int64_t min_retweets,
                                     const DatasetEncoder& encoder) {
    std::vector<Example> out;
    for (const auto& t : corpus.tweets) {
        if (t.label && t.retweet_count >= min_retweets) out.push_back(encoder.encode(t));
    }
    if (out.empty()) {
        throw_input(fmt::format("no labeled tweets with at least {} retweets", min_retweets));
    }
    return out;
}

}  // namespace trendlab::neural
