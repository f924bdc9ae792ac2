#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace trendlab::features {

/// Bijective token <-> dense column index map.
class VocabIndex {
public:
    VocabIndex() = default;
    /// Sorted, deduplicated tokens of every document.
    static VocabIndex from_documents(std::span<const std::vector<std::string>> docs);
    explicit VocabIndex(std::vector<std::string> tokens);

    std::size_t size() const { return tokens_.size(); }
    std::optional<std::size_t> index(std::string_view token) const;
    const std::string& token(std::size_t i) const { return tokens_[i]; }
    const std::vector<std::string>& tokens() const { return tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Sparse row: (column, value) pairs sorted by column, no explicit zeros.
struct SparseRow {
    std::vector<std::pair<std::size_t, double>> entries;
    double norm() const;
};

/// Compressed sparse rows, shape rows x cols.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t cols, std::vector<SparseRow> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseRow& row(std::size_t i) const { return rows_[i]; }
    std::size_t nonzeros() const;
    double at(std::size_t r, std::size_t c) const;

private:
    std::size_t cols_ = 0;
    std::vector<SparseRow> rows_;
};

/// Fitted TF-IDF transform: smoothed idf ln((1 + D) / (1 + df)) + 1, raw term
/// counts as tf, rows L2-normalised.
struct TfidfModel {
    VocabIndex vocab;
    std::vector<double> idf;
    std::size_t document_count = 0;

    static TfidfModel fit(std::span<const std::vector<std::string>> docs, VocabIndex vocab);

    /// Unknown tokens are skipped and counted in `dropped`.
    SparseRow transform(std::span<const std::string> doc, std::size_t* dropped = nullptr) const;
    SparseMatrix transform(std::span<const std::vector<std::string>> docs, std::size_t* dropped = nullptr) const;
};

struct TfidfMatrix {
    SparseMatrix matrix;
    TfidfModel model;
    std::size_t dropped_unknown = 0;
};

/// Fits on `docs` and transforms them in one go.
TfidfMatrix build_tfidf(std::span<const std::vector<std::string>> docs, const VocabIndex& vocab);

}  // namespace trendlab::features
