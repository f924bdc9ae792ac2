#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trendlab/neural/model.hpp"

namespace trendlab::neural {

struct TrainConfig {
    std::size_t epochs = 50;
    double lr = 1e-2;
    std::size_t batch_size = 16;
    std::uint64_t seed = 1;
    bool balance_classes = true;  // inverse-frequency class weights
};

struct TrainResult {
    std::vector<double> history;  // mean loss over the whole dataset after each epoch
};

/// Inverse-frequency weights N / (C * n_c); absent classes get weight 1.
std::vector<double> class_weights(std::span<const Example> data, std::size_t classes);

/// Mini-batch Adam (beta1 0.9, beta2 0.999, eps 1e-8). The batch order of each
/// epoch is a shuffle drawn from `seed`. Throws NumericError on a non-finite
/// loss and InputError on an empty dataset.
TrainResult train(Classifier& model, std::span<const Example> data, const TrainConfig& config);

}  // namespace trendlab::neural
