#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include <Eigen/Dense>

#include "trendlab/features/tfidf.hpp"

namespace trendlab::features {

/// Rank-k factors A ~ left * diag(singular) * right^T.
struct SvdFactors {
    Eigen::MatrixXd left;      // D x k, orthonormal columns
    Eigen::VectorXd singular;  // k, descending, >= 0
    Eigen::MatrixXd right;     // V x k, orthonormal columns

    std::size_t rank() const { return static_cast<std::size_t>(singular.size()); }
    std::size_t rows() const { return static_cast<std::size_t>(left.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(right.rows()); }
};

struct SvdOptions {
    std::size_t oversampling = 8;
    std::size_t power_iterations = 4;  // minimum; see truncated_svd()
    std::size_t max_power_iterations = 1000;
    double tolerance = 1e-14;          // relative change of the leading-k Ritz values
};

/// Randomized subspace iteration: a Gaussian test matrix with k + oversampling
/// columns (capped at min(D, V)) is multiplied through A, re-orthonormalised
/// after every product, and iterated at least `power_iterations` times and then
/// until the top-k Ritz values stop moving. Columns are sign-normalised so that
/// the largest-magnitude entry of each left vector is positive. The same seed
/// yields bit-identical factors. Throws InputError unless 1 <= k <= min(D, V).
SvdFactors truncated_svd(const SparseMatrix& matrix, std::size_t k, std::uint64_t seed,
                         const SvdOptions& options = {});

/// Component scores of one document: (row * right) / singular, with a zero
/// score for zero singular values. Throws InputError on a column index
/// outside the factor's vocabulary or when `dimension` differs from it.
Eigen::VectorXd project(const SparseRow& row, std::size_t dimension, const SvdFactors& factors);

/// Dense view of a sparse matrix.
Eigen::MatrixXd to_dense(const SparseMatrix& matrix);

/// Binary factor file, little-endian:
///   bytes 0-7   magic "TLSVDFAC"
///   bytes 8-11  uint32 format version (1)
///   bytes 12-15 uint32 rank k
///   uint64 D, uint64 V
///   k float64 singular values
///   D*k float64 left factor, row-major
///   V*k float64 right factor, row-major
void write_svd(std::ostream& out, const SvdFactors& factors);
SvdFactors read_svd(std::istream& in);
void save_svd(const std::filesystem::path& path, const SvdFactors& factors);
SvdFactors load_svd(const std::filesystem::path& path);

}  // namespace trendlab::features
