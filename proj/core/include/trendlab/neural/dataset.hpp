#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trendlab/corpus/tweet.hpp"
#include "trendlab/features/svd.hpp"
#include "trendlab/features/tfidf.hpp"
#include "trendlab/neural/model.hpp"
#include "trendlab/neural/vocab.hpp"

namespace trendlab::neural {

inline constexpr std::int64_t kDefaultMinRetweets = 5;

struct EncoderOptions {
    std::size_t max_len = 64;
    std::size_t svd_k = 32;  // capped at min(D, V); 0 disables the SVD features
    std::uint64_t seed = 1;
};

/// Everything needed to turn a tweet into an Example: the shared word/username
/// vocabulary, the retweeter TF-IDF transform with its truncated SVD, and the
/// class label list.
struct DatasetEncoder {
    TokenVocab vocab;
    features::TfidfModel tfidf;
    std::optional<features::SvdFactors> svd;
    std::vector<std::string> classes;  // class index -> label
    std::size_t max_len = 64;

    /// Fits on `tweets` (normally the output of select_training_tweets). Classes
    /// are the sorted distinct labels unless `classes` is given.
    static DatasetEncoder fit(std::span<const corpus::Tweet> tweets, const EncoderOptions& options = {},
                              std::vector<std::string> classes = {});

    /// Text tokens truncated to max_len; the bag holds text words, the author
    /// and every retweeter. The label is -1 when absent.
    Example encode(const corpus::Tweet& tweet) const;

    std::size_t svd_dim() const { return svd ? svd->rank() : 0; }
    /// Throws InputError for a label outside `classes`.
    int class_index(std::string_view label) const;

    /// Model shape matching this encoder, with default layer widths.
    ModelConfig model_config() const;
};

/// Labeled tweets with retweet_count >= min_retweets, in corpus order.
std::vector<corpus::Tweet> select_training_tweets(const corpus::Corpus& corpus, std::int64_t min_retweets);

/// Encoded labeled tweets that pass the retweet threshold. Throws InputError
/// when none survive.
std::vector<Example> prepare_dataset(const corpus::Corpus& corpus, std::int64_t min_retweets,
                                     const DatasetEncoder& encoder);

}  // namespace trendlab::neural
