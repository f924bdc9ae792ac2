#include "tensor_ops.hpp"

#include <cmath>
#include <numbers>

namespace trendlab::neural::ops {
namespace {

const double kGeluC = std::sqrt(2.0 / std::numbers::pi);
constexpr double kGeluA = 0.044715;

}  // namespace

Eigen::MatrixXd layer_norm(const Eigen::MatrixXd& x, const Eigen::RowVectorXd& gamma,
                           const Eigen::RowVectorXd& beta, LayerNormCache& cache) {
    const auto rows = x.rows();
    const double n = static_cast<double>(x.cols());
    cache.xhat.resize(rows, x.cols());
    cache.inv_std.resize(rows);
    Eigen::MatrixXd y(rows, x.cols());
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double mean = x.row(r).sum() / n;
        const Eigen::RowVectorXd centered = x.row(r).array() - mean;
        const double var = centered.squaredNorm() / n;
        const double inv = 1.0 / std::sqrt(var + kLayerNormEps);
        cache.inv_std(r) = inv;
        cache.xhat.row(r) = centered * inv;
        y.row(r) = cache.xhat.row(r).cwiseProduct(gamma) + beta;
    }
    return y;
}

Eigen::MatrixXd layer_norm_backward(const Eigen::MatrixXd& dy, const Eigen::RowVectorXd& gamma,
                                    const LayerNormCache& cache, Eigen::MatrixXd& dgamma, Eigen::MatrixXd& dbeta) {
    const double n = static_cast<double>(dy.cols());
    Eigen::MatrixXd dx(dy.rows(), dy.cols());
    for (Eigen::Index r = 0; r < dy.rows(); ++r) {
        dgamma.row(0) += dy.row(r).cwiseProduct(cache.xhat.row(r));
        dbeta.row(0) += dy.row(r);
        const Eigen::RowVectorXd dxhat = dy.row(r).cwiseProduct(gamma);
        const double sum = dxhat.sum();
        const double dot = dxhat.dot(cache.xhat.row(r));
        dx.row(r) = (cache.inv_std(r) / n) *
                    (n * dxhat.array() - sum - cache.xhat.row(r).array() * dot).matrix();
    }
    return dx;
}

Eigen::MatrixXd gelu(const Eigen::MatrixXd& x) {
    return x.unaryExpr([](double v) {
        return 0.5 * v * (1.0 + std::tanh(kGeluC * (v + kGeluA * v * v * v)));
    });
}

Eigen::MatrixXd gelu_grad(const Eigen::MatrixXd& x) {
    return x.unaryExpr([](double v) {
        const double t = std::tanh(kGeluC * (v + kGeluA * v * v * v));
        return 0.5 * (1.0 + t) + 0.5 * v * (1.0 - t * t) * kGeluC * (1.0 + 3.0 * kGeluA * v * v);
    });
}

Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& x) {
    Eigen::MatrixXd y(x.rows(), x.cols());
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
        const double m = x.row(r).maxCoeff();
        const Eigen::RowVectorXd e = (x.row(r).array() - m).exp();
        y.row(r) = e / e.sum();
    }
    return y;
}

Eigen::VectorXd softmax(const Eigen::VectorXd& x) {
    const double m = x.maxCoeff();
    const Eigen::VectorXd e = (x.array() - m).exp();
    return e / e.sum();
}

}  // namespace trendlab::neural::ops
