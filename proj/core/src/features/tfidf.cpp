#include "trendlab/features/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "trendlab/error.hpp"

namespace trendlab::features {

VocabIndex::VocabIndex(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (!index_.emplace(tokens_[i], i).second) throw_input("duplicate token in vocabulary: " + tokens_[i]);
    }
}

VocabIndex VocabIndex::from_documents(std::span<const std::vector<std::string>> docs) {
    std::set<std::string> all;
    for (const auto& d : docs) all.insert(d.begin(), d.end());
    return VocabIndex(std::vector<std::string>(all.begin(), all.end()));
}

std::optional<std::size_t> VocabIndex::index(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

double SparseRow::norm() const {
    double s = 0.0;
    for (const auto& [c, v] : entries) s += v * v;
    return std::sqrt(s);
}

SparseMatrix::SparseMatrix(std::size_t cols, std::vector<SparseRow> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.entries.size(); ++i) {
            if (r.entries[i].first >= cols_) throw_input("sparse column index out of range");
            if (i && r.entries[i].first <= r.entries[i - 1].first) throw_input("sparse row not sorted");
        }
    }
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.entries.size();
    return n;
}

double SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& e = rows_[r].entries;
    auto it = std::lower_bound(e.begin(), e.end(), c, [](const auto& p, std::size_t col) { return p.first < col; });
    return (it != e.end() && it->first == c) ? it->second : 0.0;
}

TfidfModel TfidfModel::fit(std::span<const std::vector<std::string>> docs, VocabIndex vocab) {
    TfidfModel m;
    m.document_count = docs.size();
    std::vector<std::size_t> df(vocab.size(), 0);
    for (const auto& d : docs) {
        std::set<std::size_t> seen;
        for (const auto& tok : d) {
            if (auto i = vocab.index(tok)) seen.insert(*i);
        }
        for (auto i : seen) ++df[i];
    }
    const double dd = static_cast<double>(docs.size());
    m.idf.resize(vocab.size());
    for (std::size_t i = 0; i < df.size(); ++i) {
        m.idf[i] = std::log((1.0 + dd) / (1.0 + static_cast<double>(df[i]))) + 1.0;
    }
    m.vocab = std::move(vocab);
    return m;
}

SparseRow TfidfModel::transform(std::span<const std::string> doc, std::size_t* dropped) const {
    std::map<std::size_t, double> tf;
    for (const auto& tok : doc) {
        if (auto i = vocab.index(tok)) {
            tf[*i] += 1.0;
        } else if (dropped) {
            ++*dropped;
        }
    }
    SparseRow row;
    for (const auto& [i, c] : tf) row.entries.emplace_back(i, c * idf[i]);
    const double n = row.norm();
    if (n > 0.0) {
        for (auto& e : row.entries) e.second /= n;
    }
    return row;
}

SparseMatrix TfidfModel::transform(std::span<const std::vector<std::string>> docs, std::size_t* dropped) const {
    std::vector<SparseRow> rows;
    rows.reserve(docs.size());
    for (const auto& d : docs) rows.push_back(transform(d, dropped));
    return SparseMatrix(vocab.size(), std::move(rows));
}

TfidfMatrix build_tfidf(std::span<const std::vector<std::string>> docs, const VocabIndex& vocab) {
    TfidfMatrix out;
    out.model = TfidfModel::fit(docs, vocab);
    out.matrix = out.model.transform(docs, &out.dropped_unknown);
    return out;
}

}  // namespace trendlab::features
