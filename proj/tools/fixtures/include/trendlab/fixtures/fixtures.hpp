#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "trendlab/bayes/regression_data.hpp"
#include "trendlab/corpus/prices.hpp"
#include "trendlab/corpus/tweet.hpp"
#include "trendlab/graphx/user_graph.hpp"

namespace trendlab::fixtures {

// ---- graphs ---------------------------------------------------------------

struct PlantedGraph {
    graphx::UserGraph graph;
    std::vector<std::size_t> truth;  // vertex -> planted block (0 or 1)
};

/// Two dense directed cliques of 4-7 members with arc weights 1-3, joined by
/// one or two unit-weight bridge arcs.
PlantedGraph planted_two_cliques(std::uint64_t seed);

/// Cliques a0..a{k-1} and b0..b{k-1} (arc i -> j for i < j, weight 1) plus the
/// single bridge a0 -> b0.
graphx::UserGraph two_cliques_with_bridge(std::size_t k = 5);

/// Directed 3-chain a -> b -> c.
graphx::UserGraph three_chain();

/// Uniform random directed graph on `vertices` named v0.. with arc probability
/// `density`; every vertex is present even when isolated.
graphx::UserGraph random_graph(std::size_t vertices, double density, std::uint64_t seed);

// ---- regression -----------------------------------------------------------

struct RegressionTruth {
    double alpha = 0.5;
    double beta = 2.0;
    double sigma = 0.3;
    double nu = 5.0;
};

/// x ~ N(0, 1), y = alpha + beta x + sigma * t(nu).
bayes::RegressionData planted_regression(std::size_t n, std::uint64_t seed, const RegressionTruth& truth = {});

// ---- corpora --------------------------------------------------------------

inline constexpr const char* kPlantedUsername = "planted_bot";

/// Labeled genuine/fake tweets whose text is drawn independently of the label;
/// a tweet is fake exactly when kPlantedUsername is among its retweeters.
/// Classes are balanced and every tweet has at least 5 retweets.
corpus::Corpus planted_username_corpus(std::size_t n, std::uint64_t seed, const std::string& id_prefix = "p");

/// 32 labeled tweets with distinct random texts and balanced labels.
corpus::Corpus overfit_corpus(std::uint64_t seed = 1);

/// Tweets labeled human / gpt2 / rnn / other whose wording depends on the
/// generator, mixed roughly 80 / 10 / 5 / 5.
corpus::Corpus generated_text_corpus(std::size_t n, std::uint64_t seed);

/// The bundled demo corpus: a month of war, bio-lab and fast-food tweets from
/// two retweet communities plus a closed bot ring; tweets with enough
/// retweets carry fake/genuine labels.
corpus::Corpus demo_corpus();

/// Trading-day closes over the demo corpus period.
corpus::PriceSeries demo_prices();

/// One tweet per (author, repetition): a graph arc u -> v of weight w becomes
/// u retweeting w distinct tweets of v, so build_user_graph() gives `graph`
/// back (isolated vertices excepted).
corpus::Corpus corpus_from_graph(const graphx::UserGraph& graph);

/// Thematic-field file text for the demo corpus.
std::string demo_fields();

/// corpus.jsonl, overfit.jsonl, generated.jsonl, cliques.jsonl, fields.txt and
/// prices.csv, as shipped under data/.
void write_fixture_files(const std::filesystem::path& dir);

}  // namespace trendlab::fixtures
