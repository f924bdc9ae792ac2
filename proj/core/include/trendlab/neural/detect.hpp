#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trendlab/corpus/tweet.hpp"
#include "trendlab/neural/dataset.hpp"
#include "trendlab/neural/model.hpp"

namespace trendlab::neural {

struct ClassShare {
    std::string label;
    std::size_t count = 0;
    double percent = 0.0;  // two decimals
};

/// Per-class share of classified tweets. Percentages are rounded to two
/// decimals by largest remainder so they add up to exactly 100.
struct ShareReport {
    std::vector<ClassShare> shares;
    std::size_t total = 0;

    /// "human - 80.00%, GPT-2 - 10.00%, RNN - 0.30%, Others - 3.00%"
    std::string to_string() const;
};

/// Display name of a generator label: human, GPT-2, RNN, Others; anything
/// else is printed unchanged.
std::string display_name(std::string_view label);

/// Shares of `counts`, listed in the order human, gpt2, rnn, other and then
/// the remaining labels alphabetically. Throws InputError when the total is 0.
ShareReport share_report(std::span<const std::string> labels, std::span<const std::size_t> counts);

/// Classifies every tweet of `corpus`.
ShareReport detect_generated(const Classifier& model, const DatasetEncoder& encoder, const corpus::Corpus& corpus);

}  // namespace trendlab::neural
