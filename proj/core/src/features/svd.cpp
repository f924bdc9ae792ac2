#include "trendlab/features/svd.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "trendlab/error.hpp"

namespace trendlab::features {
namespace {

// A * X for dense X (V x l).
Eigen::MatrixXd multiply(const SparseMatrix& a, const Eigen::MatrixXd& x) {
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(a.rows()), x.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (const auto& [c, v] : a.row(r).entries) {
            y.row(static_cast<Eigen::Index>(r)) += v * x.row(static_cast<Eigen::Index>(c));
        }
    }
    return y;
}

// A^T * X for dense X (D x l).
Eigen::MatrixXd multiply_transposed(const SparseMatrix& a, const Eigen::MatrixXd& x) {
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(a.cols()), x.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (const auto& [c, v] : a.row(r).entries) {
            y.row(static_cast<Eigen::Index>(c)) += v * x.row(static_cast<Eigen::Index>(r));
        }
    }
    return y;
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& y) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
    return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

}  // namespace

Eigen::MatrixXd to_dense(const SparseMatrix& matrix) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(matrix.rows()),
                                                static_cast<Eigen::Index>(matrix.cols()));
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        for (const auto& [c, v] : matrix.row(r).entries) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
        }
    }
    return out;
}

SvdFactors truncated_svd(const SparseMatrix& matrix, std::size_t k, std::uint64_t seed, const SvdOptions& options) {
    const std::size_t full = std::min(matrix.rows(), matrix.cols());
    if (k < 1 || k > full) {
        throw_input(fmt::format("SVD rank {} outside [1, {}] for a {}x{} matrix", k, full, matrix.rows(),
                                matrix.cols()));
    }
    const auto l = static_cast<Eigen::Index>(std::min(k + options.oversampling, full));
    const auto ki = static_cast<Eigen::Index>(k);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd omega(static_cast<Eigen::Index>(matrix.cols()), l);
    for (Eigen::Index c = 0; c < omega.cols(); ++c) {
        for (Eigen::Index r = 0; r < omega.rows(); ++r) omega(r, c) = gauss(rng);
    }

    Eigen::MatrixXd q = orthonormalize(multiply(matrix, omega));
    Eigen::VectorXd previous = Eigen::VectorXd::Constant(ki, -1.0);
    Eigen::MatrixXd z;
    Eigen::JacobiSVD<Eigen::MatrixXd> small;
    for (std::size_t iter = 0;; ++iter) {
        // B^T = A^T Q = Z R; the SVD of the l x l factor R gives B's factors with roles swapped.
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(multiply_transposed(matrix, q));
        z = qr.householderQ() * Eigen::MatrixXd::Identity(qr.rows(), l);
        const Eigen::MatrixXd r = qr.matrixQR().topRows(l).triangularView<Eigen::Upper>();
        small.compute(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Eigen::VectorXd current = small.singularValues().head(ki);
        const double scale = std::max(current(0), 1e-300);
        const bool settled = (current - previous).cwiseAbs().maxCoeff() <= options.tolerance * scale;
        if (iter >= options.power_iterations && (settled || iter >= options.max_power_iterations)) break;
        previous = current;
        q = orthonormalize(multiply(matrix, z));
    }

    SvdFactors f;
    f.singular = small.singularValues().head(ki);
    f.right = z * small.matrixU().leftCols(ki);
    f.left = q * small.matrixV().leftCols(ki);
    for (Eigen::Index c = 0; c < ki; ++c) {
        Eigen::Index at = 0;
        f.left.col(c).cwiseAbs().maxCoeff(&at);
        if (f.left(at, c) < 0.0) {
            f.left.col(c) *= -1.0;
            f.right.col(c) *= -1.0;
        }
    }
    return f;
}

Eigen::VectorXd project(const SparseRow& row, std::size_t dimension, const SvdFactors& factors) {
    if (dimension != factors.cols()) {
        throw_input(fmt::format("document dimension {} does not match SVD vocabulary size {}", dimension,
                                factors.cols()));
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(factors.rank()));
    for (const auto& [c, v] : row.entries) {
        if (c >= dimension) throw_input(fmt::format("column {} outside SVD vocabulary", c));
        out += v * factors.right.row(static_cast<Eigen::Index>(c)).transpose();
    }
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        out(i) = factors.singular(i) > 0.0 ? out(i) / factors.singular(i) : 0.0;
    }
    return out;
}

}  // namespace trendlab::features
