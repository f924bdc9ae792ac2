#include "trendlab/neural/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "trendlab/error.hpp"

namespace trendlab::neural {
namespace {

constexpr double kBeta1 = 0.9;
constexpr double kBeta2 = 0.999;
constexpr double kEps = 1e-8;

}  // namespace

std::vector<double> class_weights(std::span<const Example> data, std::size_t classes) {
    std::vector<std::size_t> counts(classes, 0);
    for (const auto& ex : data) {
        if (ex.label < 0 || static_cast<std::size_t>(ex.label) >= classes) {
            throw_input(fmt::format("label {} outside [0, {})", ex.label, classes));
        }
        ++counts[static_cast<std::size_t>(ex.label)];
    }
    std::vector<double> w(classes, 1.0);
    for (std::size_t c = 0; c < classes; ++c) {
        if (counts[c] > 0) {
            w[c] = static_cast<double>(data.size()) / (static_cast<double>(classes) * static_cast<double>(counts[c]));
        }
    }
    return w;
}

TrainResult train(Classifier& model, std::span<const Example> data, const TrainConfig& config) {
    if (data.empty()) throw_input("cannot train on an empty dataset");
    if (config.batch_size == 0) throw_input("batch_size must be positive");
    if (!(config.lr >= 0.0) || !std::isfinite(config.lr)) throw_input("learning rate must be finite and >= 0");

    const std::vector<double> weights =
        config.balance_classes ? class_weights(data, model.config().classes) : std::vector<double>{};

    auto& tensors = model.tensors();
    std::vector<Eigen::MatrixXd> m;
    std::vector<Eigen::MatrixXd> v;
    for (const auto& t : tensors) {
        m.push_back(Eigen::MatrixXd::Zero(t.value.rows(), t.value.cols()));
        v.push_back(Eigen::MatrixXd::Zero(t.value.rows(), t.value.cols()));
    }

    std::mt19937_64 rng(config.seed);
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Example> batch;
    std::size_t step = 0;
    TrainResult result;
    result.history.reserve(config.epochs);

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
            const std::size_t end = std::min(order.size(), start + config.batch_size);
            batch.clear();
            for (std::size_t i = start; i < end; ++i) batch.push_back(data[order[i]]);
            auto lg = loss_and_grad(model, batch, weights);
            if (!std::isfinite(lg.loss)) {
                throw_numeric(fmt::format("non-finite training loss at epoch {}, step {} (lr {}, batch of {})",
                                          epoch + 1, step + 1, config.lr, batch.size()));
            }
            ++step;
            if (config.lr == 0.0) continue;
            const double c1 = 1.0 - std::pow(kBeta1, static_cast<double>(step));
            const double c2 = 1.0 - std::pow(kBeta2, static_cast<double>(step));
            for (std::size_t i = 0; i < tensors.size(); ++i) {
                const auto& g = lg.grads[i];
                m[i] = kBeta1 * m[i] + (1.0 - kBeta1) * g;
                v[i] = kBeta2 * v[i] + (1.0 - kBeta2) * g.cwiseAbs2();
                tensors[i].value.array() -=
                    config.lr * (m[i].array() / c1) / ((v[i].array() / c2).sqrt() + kEps);
            }
        }
        const double epoch_loss = loss(model, data, weights);
        if (!std::isfinite(epoch_loss)) {
            throw_numeric(fmt::format("non-finite training loss after epoch {} (lr {})", epoch + 1, config.lr));
        }
        result.history.push_back(epoch_loss);
    }
    return result;
}

}  // namespace trendlab::neural
