#pragma once

#include <Eigen/Dense>

namespace trendlab::neural::ops {

inline constexpr double kLayerNormEps = 1e-5;

struct LayerNormCache {
    Eigen::MatrixXd xhat;     // normalised input
    Eigen::VectorXd inv_std;  // per row
};

/// Row-wise LayerNorm: gamma * (x - mean) / sqrt(var + eps) + beta.
Eigen::MatrixXd layer_norm(const Eigen::MatrixXd& x, const Eigen::RowVectorXd& gamma,
                           const Eigen::RowVectorXd& beta, LayerNormCache& cache);

/// Returns dL/dx and accumulates dL/dgamma, dL/dbeta.
Eigen::MatrixXd layer_norm_backward(const Eigen::MatrixXd& dy, const Eigen::RowVectorXd& gamma,
                                    const LayerNormCache& cache, Eigen::MatrixXd& dgamma, Eigen::MatrixXd& dbeta);

/// tanh approximation of GELU and its derivative.
Eigen::MatrixXd gelu(const Eigen::MatrixXd& x);
Eigen::MatrixXd gelu_grad(const Eigen::MatrixXd& x);

/// Numerically stable softmax of every row.
Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& x);
Eigen::VectorXd softmax(const Eigen::VectorXd& x);

}  // namespace trendlab::neural::ops
