#include "trendlab/neural/vocab.hpp"

#include <set>

#include "trendlab/error.hpp"

namespace trendlab::neural {

TokenVocab::TokenVocab(std::vector<std::string> words, std::vector<std::string> usernames)
    : words_(std::move(words)), usernames_(std::move(usernames)) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (!word_ids_.emplace(words_[i], static_cast<int>(kReserved + i)).second) {
            throw_input("duplicate word in vocabulary: " + words_[i]);
        }
    }
    const std::size_t offset = username_offset();
    for (std::size_t i = 0; i < usernames_.size(); ++i) {
        if (!username_ids_.emplace(usernames_[i], static_cast<int>(offset + i)).second) {
            throw_input("duplicate username in vocabulary: " + usernames_[i]);
        }
    }
}

TokenVocab TokenVocab::build(std::span<const std::vector<std::string>> word_docs,
                             std::span<const std::vector<std::string>> username_docs) {
    std::set<std::string> words;
    std::set<std::string> users;
    for (const auto& d : word_docs) words.insert(d.begin(), d.end());
    for (const auto& d : username_docs) users.insert(d.begin(), d.end());
    return TokenVocab({words.begin(), words.end()}, {users.begin(), users.end()});
}

int TokenVocab::word_id(std::string_view word) const {
    auto it = word_ids_.find(std::string(word));
    return it == word_ids_.end() ? kUnknown : it->second;
}

int TokenVocab::username_id(std::string_view username) const {
    auto it = username_ids_.find(std::string(username));
    return it == username_ids_.end() ? kUnknown : it->second;
}

}  // namespace trendlab::neural
