#include "trendlab/mining/tokenize.hpp"

#include <algorithm>
#include <utility>

namespace trendlab::mining {
namespace {

bool is_word_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        char c = s[i];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (c != prefix[i]) return false;
    }
    return true;
}

bool is_url(std::string_view chunk) {
    return starts_with_ci(chunk, "http://") || starts_with_ci(chunk, "https://") ||
           starts_with_ci(chunk, "www.");
}

std::size_t code_points(std::string_view s) {
    return static_cast<std::size_t>(std::count_if(
        s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

// Non-ASCII punctuation, spacing and symbol code points that separate words.
bool is_separator_code_point(char32_t cp) {
    return (cp >= 0x00A0 && cp <= 0x00BF) || cp == 0x00D7 || cp == 0x00F7 || (cp >= 0x2000 && cp <= 0x206F) ||
           (cp >= 0x2190 && cp <= 0x2BFF) || (cp >= 0x3000 && cp <= 0x3003) || (cp >= 0xFE00 && cp <= 0xFE0F) ||
           (cp >= 0x1F000 && cp <= 0x1FAFF);
}

// Length and value of the UTF-8 sequence at `i`; malformed bytes decode as
// themselves with length 1.
std::pair<std::size_t, char32_t> decode(std::string_view s, std::size_t i) {
    const auto b = static_cast<unsigned char>(s[i]);
    std::size_t len = b >= 0xF0 ? 4 : b >= 0xE0 ? 3 : b >= 0xC0 ? 2 : 1;
    if (len == 1 || i + len > s.size()) return {1, b};
    char32_t cp = b & (0x3F >> (len - 1));
    for (std::size_t k = 1; k < len; ++k) {
        const auto c = static_cast<unsigned char>(s[i + k]);
        if ((c & 0xC0) != 0x80) return {1, b};
        cp = (cp << 6) | (c & 0x3F);
    }
    return {len, cp};
}

// Typographic apostrophe U+2019 becomes '\''; other Unicode punctuation and
// symbols become spaces.
std::string normalize(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (static_cast<unsigned char>(text[i]) < 0x80) {
            out += text[i++];
            continue;
        }
        const auto [len, cp] = decode(text, i);
        if (cp == 0x2019) {
            out += '\'';
        } else if (is_separator_code_point(cp)) {
            out += ' ';
        } else {
            out.append(text.substr(i, len));
        }
        i += len;
    }
    return out;
}

void split_chunk(std::string_view chunk, std::vector<std::string>& out) {
    std::size_t i = 0;
    const std::size_t n = chunk.size();
    while (i < n) {
        const auto c = static_cast<unsigned char>(chunk[i]);
        if (c == '@') {
            // mention: skip the handle
            ++i;
            while (i < n && (is_word_byte(static_cast<unsigned char>(chunk[i])) || chunk[i] == '_')) ++i;
            continue;
        }
        if (!is_word_byte(c)) {
            ++i;
            continue;
        }
        std::string word;
        while (i < n) {
            const auto d = static_cast<unsigned char>(chunk[i]);
            if (is_word_byte(d)) {
                word += (d >= 'A' && d <= 'Z') ? static_cast<char>(d - 'A' + 'a') : static_cast<char>(d);
                ++i;
            } else if (d == '\'' && i + 1 < n && is_word_byte(static_cast<unsigned char>(chunk[i + 1]))) {
                word += '\'';
                ++i;
            } else {
                break;
            }
        }
        out.push_back(std::move(word));
    }
}

}  // namespace

bool Transaction::contains(std::string_view item) const {
    return std::binary_search(items.begin(), items.end(), item,
                              [](std::string_view a, std::string_view b) { return a < b; });
}

Transaction make_transaction(std::vector<std::string> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return Transaction{std::move(items)};
}

std::vector<std::string> token_sequence(std::string_view raw) {
    const std::string text = normalize(raw);
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) {
            std::string_view chunk(text.data() + i, j - i);
            if (!is_url(chunk)) split_chunk(chunk, out);
        }
        i = j;
    }
    return out;
}

Transaction tokenize(std::string_view text) {
    std::vector<std::string> kept;
    for (auto& token : token_sequence(text)) {
        if (code_points(token) < 2 || is_stopword(token)) continue;
        kept.push_back(std::move(token));
    }
    return make_transaction(std::move(kept));
}

}  // namespace trendlab::mining
