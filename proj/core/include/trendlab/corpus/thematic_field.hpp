#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trendlab/corpus/tweet.hpp"

namespace trendlab::corpus {

/// AND-of-OR keyword query. Each group must be hit by at least one of its
/// keywords; a keyword hits when its word sequence occurs contiguously in the
/// tweet's token sequence, case-insensitively. Single-word keywords therefore
/// match whole tokens only.
class ThematicField {
public:
    using Group = std::vector<std::string>;

    /// Lowercases keywords; throws InputError on an empty name, no groups, an
    /// empty group, or a keyword with no word characters.
    ThematicField(std::string name, std::vector<Group> groups);

    const std::string& name() const { return name_; }
    const std::vector<Group>& groups() const { return groups_; }

    bool matches(std::string_view text) const;
    bool matches(const std::vector<std::string>& tokens) const;

    /// Renders the query back in `name: (a OR b) c` form.
    std::string to_string() const;

private:
    std::string name_;
    std::vector<Group> groups_;
    std::vector<std::vector<std::vector<std::string>>> phrases_;
};

bool match_thematic_field(const Tweet& tweet, const ThematicField& field);

/// Parses one `name: (kw OR kw ...) kw (kw, kw)` line. Inside parentheses,
/// `OR`, commas and plain adjacency all separate alternatives; a bare keyword
/// outside parentheses is a group of its own. Double quotes make a phrase.
ThematicField parse_thematic_field(std::string_view line);

/// One field per line; blank lines and lines starting with '#' are skipped.
/// Errors carry the 1-based line number.
std::vector<ThematicField> parse_thematic_fields(std::istream& in);
std::vector<ThematicField> load_thematic_fields(const std::filesystem::path& path);

}  // namespace trendlab::corpus
