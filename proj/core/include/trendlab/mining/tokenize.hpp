#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trendlab::mining {

/// Deduplicated keyword set of one message; items are kept sorted.
struct Transaction {
    std::vector<std::string> items;

    bool contains(std::string_view item) const;
    bool operator==(const Transaction&) const = default;
};

/// Builds a transaction from arbitrary items: sorts and removes duplicates.
Transaction make_transaction(std::vector<std::string> items);

/// Lowercased word sequence of `text` in reading order, duplicates kept.
///
/// Words are maximal runs of ASCII letters/digits and non-ASCII letters;
/// Unicode punctuation, spaces, symbols and emoji separate words, and U+2019
/// counts as an apostrophe. An apostrophe survives only between two word
/// characters. URLs (chunks starting with http://, https:// or www.) and
/// @-mentions are dropped, and #-tags contribute their text without the '#'.
/// No stopword or length filter is applied.
std::vector<std::string> token_sequence(std::string_view text);

/// Keyword transaction of `text`: token_sequence() minus tokens shorter than two
/// code points and bundled stopwords, deduplicated.
Transaction tokenize(std::string_view text);

/// The frozen English stopword list (sorted).
const std::vector<std::string>& stopwords();
bool is_stopword(std::string_view token);

}  // namespace trendlab::mining
