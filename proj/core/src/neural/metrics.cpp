#include "trendlab/neural/metrics.hpp"

#include <fmt/format.h>

#include "trendlab/error.hpp"

namespace trendlab::neural {
namespace {

double ratio(std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

EvalReport report_from_confusion(std::vector<std::vector<std::size_t>> confusion) {
    const std::size_t c = confusion.size();
    for (const auto& row : confusion) {
        if (row.size() != c) throw_input("confusion matrix must be square");
    }
    EvalReport r;
    r.support.assign(c, 0);
    r.precision.assign(c, 0.0);
    r.recall.assign(c, 0.0);
    r.f1.assign(c, 0.0);
    std::size_t total = 0;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < c; ++i) {
        std::size_t predicted = 0;
        for (std::size_t j = 0; j < c; ++j) {
            r.support[i] += confusion[i][j];
            predicted += confusion[j][i];
        }
        total += r.support[i];
        correct += confusion[i][i];
        r.precision[i] = ratio(confusion[i][i], predicted);
        r.recall[i] = ratio(confusion[i][i], r.support[i]);
        const double s = r.precision[i] + r.recall[i];
        r.f1[i] = s == 0.0 ? 0.0 : 2.0 * r.precision[i] * r.recall[i] / s;
    }
    r.accuracy = ratio(correct, total);
    r.confusion = std::move(confusion);
    return r;
}

EvalReport evaluate(const Classifier& model, std::span<const Example> data) {
    if (data.empty()) throw_input("cannot evaluate on an empty dataset");
    const std::size_t c = model.config().classes;
    std::vector<std::vector<std::size_t>> confusion(c, std::vector<std::size_t>(c, 0));
    for (const auto& ex : data) {
        if (ex.label < 0 || static_cast<std::size_t>(ex.label) >= c) {
            throw_input(fmt::format("label {} outside [0, {})", ex.label, c));
        }
        ++confusion[static_cast<std::size_t>(ex.label)][static_cast<std::size_t>(predict(model, ex))];
    }
    return report_from_confusion(std::move(confusion));
}

}  // namespace trendlab::neural
