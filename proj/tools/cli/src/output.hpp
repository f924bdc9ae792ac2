#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace trendlab::cli {

using Json = nlohmann::ordered_json;

/// Creates the directory (and parents) when missing.
std::filesystem::path prepare_out_dir(const std::string& dir);

/// Writes `content` byte for byte, replacing any existing file.
void write_file(const std::filesystem::path& path, std::string_view content);

void write_json(const std::filesystem::path& path, const Json& value);

/// Accumulates CSV rows in memory.
class CsvText {
public:
    explicit CsvText(const std::vector<std::string>& header);
    void row(const std::vector<std::string>& fields);
    const std::string& str() const { return text_; }

private:
    std::string text_;
};

std::string num(double value);

/// Safe file-name fragment: letters, digits, '-' and '_' kept, anything else '_'.
std::string file_stem(std::string_view name);

}  // namespace trendlab::cli
