#pragma once

#include <span>
#include <vector>

#include "trendlab/neural/model.hpp"

namespace trendlab::neural {

struct EvalReport {
    std::vector<std::vector<std::size_t>> confusion;  // [actual][predicted]
    std::vector<std::size_t> support;
    std::vector<double> precision;
    std::vector<double> recall;
    std::vector<double> f1;
    double accuracy = 0.0;
};

/// Metrics from a square confusion matrix; undefined ratios are 0.
EvalReport report_from_confusion(std::vector<std::vector<std::size_t>> confusion);

/// Throws InputError on an empty dataset.
EvalReport evaluate(const Classifier& model, std::span<const Example> data);

}  // namespace trendlab::neural
