#include "trendlab/corpus/thematic_field.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "trendlab/error.hpp"
#include "trendlab/mining/tokenize.hpp"

namespace trendlab::corpus {
namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool contains_phrase(const std::vector<std::string>& tokens, const std::vector<std::string>& phrase) {
    if (phrase.size() > tokens.size()) return false;
    return std::search(tokens.begin(), tokens.end(), phrase.begin(), phrase.end()) != tokens.end();
}

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\r')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() { return src[pos]; }

    // A keyword runs until whitespace, a comma or a parenthesis; quotes group.
    std::string keyword() {
        if (src[pos] == '"') {
            const auto end = src.find('"', pos + 1);
            if (end == std::string_view::npos) throw_input("unterminated quote");
            std::string out(src.substr(pos + 1, end - pos - 1));
            pos = end + 1;
            return out;
        }
        const std::size_t start = pos;
        while (pos < src.size() && src[pos] != ' ' && src[pos] != '\t' && src[pos] != ',' &&
               src[pos] != '(' && src[pos] != ')' && src[pos] != '\r') {
            ++pos;
        }
        return std::string(src.substr(start, pos - start));
    }
};

}  // namespace

ThematicField::ThematicField(std::string name, std::vector<Group> groups) : name_(trim(name)) {
    if (name_.empty()) throw_input("thematic field needs a name");
    if (groups.empty()) throw_input(fmt::format("thematic field '{}' has no keyword groups", name_));
    for (auto& group : groups) {
        if (group.empty()) throw_input(fmt::format("thematic field '{}' has an empty group", name_));
        Group lowered;
        std::vector<std::vector<std::string>> phrases;
        for (const auto& kw : group) {
            std::string k = lower_ascii(trim(kw));
            if (k.empty()) throw_input(fmt::format("thematic field '{}' has an empty keyword", name_));
            auto phrase = mining::token_sequence(k);
            if (phrase.empty()) {
                throw_input(fmt::format("keyword '{}' in field '{}' has no word characters", k, name_));
            }
            lowered.push_back(std::move(k));
            phrases.push_back(std::move(phrase));
        }
        groups_.push_back(std::move(lowered));
        phrases_.push_back(std::move(phrases));
    }
}

bool ThematicField::matches(const std::vector<std::string>& tokens) const {
    return std::all_of(phrases_.begin(), phrases_.end(), [&](const auto& group) {
        return std::any_of(group.begin(), group.end(),
                           [&](const auto& phrase) { return contains_phrase(tokens, phrase); });
    });
}

bool ThematicField::matches(std::string_view text) const { return matches(mining::token_sequence(text)); }

std::string ThematicField::to_string() const {
    auto render = [](const std::string& kw) {
        return kw.find(' ') == std::string::npos ? kw : '"' + kw + '"';
    };
    std::string out = name_ + ":";
    for (const auto& group : groups_) {
        out += ' ';
        if (group.size() == 1) {
            out += render(group.front());
            continue;
        }
        out += '(';
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (i) out += " OR ";
            out += render(group[i]);
        }
        out += ')';
    }
    return out;
}

bool match_thematic_field(const Tweet& tweet, const ThematicField& field) { return field.matches(tweet.text); }

ThematicField parse_thematic_field(std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw_input("expected 'name: query'");
    const std::string name = trim(line.substr(0, colon));
    if (name.empty()) throw_input("missing field name before ':'");

    Lexer lex{line.substr(colon + 1)};
    std::vector<ThematicField::Group> groups;
    while (!lex.done()) {
        const char c = lex.peek();
        if (c == ')') throw_input("unbalanced ')'");
        if (c == ',') throw_input("',' outside parentheses");
        if (c != '(') {
            std::string kw = lex.keyword();
            if (kw == "OR") throw_input("'OR' outside parentheses");
            groups.push_back({std::move(kw)});
            continue;
        }
        ++lex.pos;
        ThematicField::Group group;
        bool closed = false;
        while (!lex.done()) {
            const char d = lex.peek();
            if (d == ')') {
                ++lex.pos;
                closed = true;
                break;
            }
            if (d == '(') throw_input("nested parentheses are not supported");
            if (d == ',') {
                ++lex.pos;
                continue;
            }
            std::string kw = lex.keyword();
            if (kw == "OR") continue;
            group.push_back(std::move(kw));
        }
        if (!closed) throw_input("missing ')'");
        if (group.empty()) throw_input("empty parentheses");
        groups.push_back(std::move(group));
    }
    return ThematicField(name, std::move(groups));
}

std::vector<ThematicField> parse_thematic_fields(std::istream& in) {
    std::vector<ThematicField> fields;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        try {
            fields.push_back(parse_thematic_field(t));
        } catch (const InputError& e) {
            throw InputError(fmt::format("line {}: {}", line_no, e.what()));
        }
    }
    return fields;
}

std::vector<ThematicField> load_thematic_fields(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw_input(fmt::format("cannot open thematic-field file '{}'", path.string()));
    return parse_thematic_fields(in);
}

}  // namespace trendlab::corpus
