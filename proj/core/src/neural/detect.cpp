#include "trendlab/neural/detect.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <fmt/format.h>

#include "trendlab/error.hpp"

namespace trendlab::neural {
namespace {

constexpr std::array<std::string_view, 4> kCanonical = {"human", "gpt2", "rnn", "other"};

std::size_t rank_of(std::string_view label) {
    auto it = std::find(kCanonical.begin(), kCanonical.end(), label);
    return static_cast<std::size_t>(it - kCanonical.begin());
}

}  // namespace

std::string display_name(std::string_view label) {
    if (label == "human") return "human";
    if (label == "gpt2") return "GPT-2";
    if (label == "rnn") return "RNN";
    if (label == "other") return "Others";
    return std::string(label);
}

std::string ShareReport::to_string() const {
    std::string out;
    for (const auto& s : shares) {
        if (!out.empty()) out += ", ";
        out += fmt::format("{} - {:.2f}%", display_name(s.label), s.percent);
    }
    return out;
}

ShareReport share_report(std::span<const std::string> labels, std::span<const std::size_t> counts) {
    if (labels.size() != counts.size()) throw_input("label and count lists differ in length");
    ShareReport r;
    r.total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (r.total == 0) throw_input("no tweets to classify");

    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ra = rank_of(labels[a]);
        const auto rb = rank_of(labels[b]);
        if (ra != rb) return ra < rb;
        return labels[a] < labels[b];
    });

    // Percentages in hundredths, largest remainder first.
    constexpr std::size_t kUnits = 10000;
    std::vector<std::size_t> units(order.size());
    std::vector<std::size_t> rem(order.size());
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t scaled = counts[order[i]] * kUnits;
        units[i] = scaled / r.total;
        rem[i] = scaled % r.total;
        assigned += units[i];
    }
    std::vector<std::size_t> by_rem(order.size());
    std::iota(by_rem.begin(), by_rem.end(), 0);
    std::stable_sort(by_rem.begin(), by_rem.end(), [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
    for (std::size_t i = 0; assigned < kUnits; ++i, ++assigned) ++units[by_rem[i]];

    for (std::size_t i = 0; i < order.size(); ++i) {
        r.shares.push_back({labels[order[i]], counts[order[i]], static_cast<double>(units[i]) / 100.0});
    }
    return r;
}

ShareReport detect_generated(const Classifier& model, const DatasetEncoder& encoder, const corpus::Corpus& corpus) {
    if (encoder.classes.size() != model.config().classes) {
        throw_input(fmt::format("dimension mismatch: encoder has {} classes, model {}", encoder.classes.size(),
                                model.config().classes));
    }
    std::vector<std::size_t> counts(encoder.classes.size(), 0);
    for (const auto& t : corpus.tweets) {
        corpus::Tweet unlabeled = t;
        unlabeled.label.reset();
        ++counts[static_cast<std::size_t>(predict(model, encoder.encode(unlabeled)))];
    }
    return share_report(encoder.classes, counts);
}

}  // namespace trendlab::neural
