#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace trendlab::neural {

/// Shape of the three-branch classifier. Slot widths in the concatenated
/// feature vector are fixed by the config; a disabled branch fills its slot
/// with zeros.
struct ModelConfig {
    std::size_t vocab_size = 0;
    // transformer branch
    std::size_t model_dim = 32;
    std::size_t heads = 4;
    std::size_t layers = 2;
    std::size_t max_len = 64;
    std::size_t ff_dim = 64;
    // embedding-average branch
    std::size_t embed_dim = 32;
    // truncated-SVD branch
    std::size_t svd_dim = 0;
    std::size_t svd_hidden = 16;
    // head
    std::size_t classes = 2;

    bool use_transformer = true;
    bool use_bag = true;
    bool use_svd = true;

    /// Throws InputError when the shape is inconsistent.
    void validate() const;
    std::size_t concat_width() const { return model_dim + embed_dim + svd_hidden; }
};

/// One encoded tweet. Id 0 is padding in both sequences.
struct Example {
    std::vector<int> tokens;  // word ids for the transformer branch
    std::vector<int> bag;     // word and username ids for the averaging branch
    Eigen::VectorXd svd;      // truncated-SVD component scores, length svd_dim
    int label = -1;
};

struct NamedTensor {
    std::string name;
    Eigen::MatrixXd value;
};

/// Weights of the classifier, in a fixed order determined by the config.
class Classifier {
public:
    Classifier() = default;
    /// Random initialisation from `seed`; LayerNorm gains start at one and all
    /// biases at zero.
    Classifier(const ModelConfig& config, std::uint64_t seed);
    /// Takes tensors from a checkpoint; names and shapes must match the config.
    Classifier(const ModelConfig& config, std::vector<NamedTensor> tensors);

    const ModelConfig& config() const { return config_; }
    std::vector<NamedTensor>& tensors() { return tensors_; }
    const std::vector<NamedTensor>& tensors() const { return tensors_; }
    std::size_t parameter_count() const;

    Eigen::MatrixXd& param(std::size_t i) { return tensors_[i].value; }
    const Eigen::MatrixXd& param(std::size_t i) const { return tensors_[i].value; }

private:
    ModelConfig config_;
    std::vector<NamedTensor> tensors_;
};

/// Names and shapes of every tensor for `config`, in storage order.
std::vector<NamedTensor> parameter_layout(const ModelConfig& config);

/// Class probabilities. Throws InputError when ids, sequence length or the SVD
/// feature width do not fit the config.
Eigen::VectorXd forward(const Classifier& model, const Example& example);
int predict(const Classifier& model, const Example& example);

struct LossAndGrad {
    double loss = 0.0;
    std::vector<Eigen::MatrixXd> grads;  // parallel to Classifier::tensors()
};

/// Weighted mean cross-entropy over the batch and its gradient for every
/// tensor: sum_i w[y_i] * -log p_i(y_i) / sum_i w[y_i]. An empty
/// `class_weights` means all ones.
LossAndGrad loss_and_grad(const Classifier& model, std::span<const Example> batch,
                          std::span<const double> class_weights = {});

/// Loss only, same definition.
double loss(const Classifier& model, std::span<const Example> batch, std::span<const double> class_weights = {});

}  // namespace trendlab::neural
