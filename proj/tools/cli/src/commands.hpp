#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "trendlab/corpus/thematic_field.hpp"

namespace trendlab::cli {

struct Common {
    std::string corpus;
    std::string out;
};

struct TrendsOptions {
    Common common;
    std::string fields;
    std::size_t window = 7;
};

struct MineOptions {
    Common common;
    std::string fields;
    std::string field;
    double min_support = 0.02;
    double min_confidence = 0.5;
    std::size_t max_size = 5;
    std::string keyword;
    std::size_t groups = 10;
};

struct GraphOptions {
    Common common;
    std::size_t steps = 4;
    double damping = 0.85;
    std::size_t iterations = 200;
    double threshold = 0.05;
    std::uint64_t seed = 0;
};

struct ImpactOptions {
    Common common;
    std::string fields;
    std::string field;
    std::string prices;
    std::size_t window = 7;
    std::size_t chains = 4;
    std::size_t draws = 2000;
    std::size_t warmup = 1000;
    std::size_t bins = 50;
    std::uint64_t seed = 0;
};

struct TrainOptions {
    Common common;
    std::int64_t min_retweets = 5;
    std::size_t epochs = 50;
    double lr = 1e-2;
    std::size_t batch_size = 16;
    std::size_t max_len = 64;
    std::size_t svd_k = 32;
    std::size_t model_dim = 32;
    std::size_t heads = 4;
    std::size_t layers = 2;
    std::size_t ff_dim = 64;
    std::size_t embed_dim = 32;
    std::size_t svd_hidden = 16;
    bool no_text = false;
    bool no_bag = false;
    bool no_svd = false;
    bool no_balance = false;
    std::uint64_t seed = 0;
};

struct ClassifyOptions {
    Common common;
    std::string model;
    std::int64_t min_retweets = 5;
};

struct DetectOptions {
    Common common;
    std::string model;
};

void run_trends(const TrendsOptions& o, std::ostream& out);
void run_mine(const MineOptions& o, std::ostream& out);
void run_graph(const GraphOptions& o, std::ostream& out, std::ostream& err);
void run_impact(const ImpactOptions& o, std::ostream& out, std::ostream& err);
void run_train(const TrainOptions& o, std::ostream& out);
void run_classify(const ClassifyOptions& o, std::ostream& out);
void run_detect(const DetectOptions& o, std::ostream& out);

/// The field named `name`, or the only field of the file when `name` is empty.
corpus::ThematicField select_field(const std::string& fields_path, const std::string& name);

}  // namespace trendlab::cli
