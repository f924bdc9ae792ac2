#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "trendlab/mining/tokenize.hpp"

namespace trendlab::mining {
namespace {

constexpr std::array<std::string_view, 127> kStopwords = {
    "a",       "about",   "above",  "after",   "again",  "against", "all",     "am",
    "an",      "and",     "any",    "are",     "as",     "at",      "be",      "because",
    "been",    "before",  "being",  "below",   "between", "both",   "but",     "by",
    "can",     "could",   "did",    "do",      "does",   "doing",   "down",    "during",
    "each",    "few",     "for",    "from",    "further", "had",    "has",     "have",
    "having",  "he",      "her",    "here",    "hers",   "herself", "him",     "himself",
    "his",     "how",     "i",      "if",      "in",     "into",    "is",      "it",
    "it's",    "its",     "itself", "just",    "me",     "more",    "most",    "my",
    "myself",  "no",      "nor",    "not",     "now",    "of",      "off",     "on",
    "once",    "only",    "or",     "other",   "our",    "ours",    "ourselves", "out",
    "over",    "own",     "rt",     "same",    "she",    "should",  "so",      "some",
    "such",    "than",    "that",   "the",     "their",  "theirs",  "them",    "themselves",
    "then",    "there",   "these",  "they",    "this",   "those",   "through", "to",
    "too",     "under",   "until",  "up",      "very",   "was",     "we",      "were",
    "what",    "when",    "where",  "which",   "while",  "who",     "whom",    "why",
    "will",    "with",    "would",  "you",     "your",   "yours",   "yourself",
};

std::vector<std::string> sorted_list() {
    std::vector<std::string> out(kStopwords.begin(), kStopwords.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<std::string>& stopwords() {
    static const std::vector<std::string> list = sorted_list();
    return list;
}

bool is_stopword(std::string_view token) {
    const auto& list = stopwords();
    return std::binary_search(list.begin(), list.end(), token,
                              [](std::string_view a, std::string_view b) { return a < b; });
}

}  // namespace trendlab::mining
