#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace trendlab::neural {

/// Shared id space for text words and usernames:
///   0 = padding, 1 = unknown, [2, 2 + W) words, [2 + W, 2 + W + U) usernames.
/// Usernames live at a disjoint offset, so a username equal to some word still
/// gets its own id.
class TokenVocab {
public:
    static constexpr int kPad = 0;
    static constexpr int kUnknown = 1;
    static constexpr std::size_t kReserved = 2;

    TokenVocab() = default;
    TokenVocab(std::vector<std::string> words, std::vector<std::string> usernames);

    /// Sorted distinct words and usernames of the given documents.
    static TokenVocab build(std::span<const std::vector<std::string>> word_docs,
                            std::span<const std::vector<std::string>> username_docs);

    int word_id(std::string_view word) const;
    int username_id(std::string_view username) const;

    std::size_t size() const { return kReserved + words_.size() + usernames_.size(); }
    std::size_t username_offset() const { return kReserved + words_.size(); }
    const std::vector<std::string>& words() const { return words_; }
    const std::vector<std::string>& usernames() const { return usernames_; }

private:
    std::vector<std::string> words_;
    std::vector<std::string> usernames_;
    std::unordered_map<std::string, int> word_ids_;
    std::unordered_map<std::string, int> username_ids_;
};

}  // namespace trendlab::neural
