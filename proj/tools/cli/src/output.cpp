#include "output.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "trendlab/csv.hpp"
#include "trendlab/error.hpp"

namespace trendlab::cli {

std::filesystem::path prepare_out_dir(const std::string& dir) {
    const std::filesystem::path p(dir);
    std::error_code ec;
    std::filesystem::create_directories(p, ec);
    if (ec || !std::filesystem::is_directory(p)) throw_input(fmt::format("cannot create output directory '{}'", dir));
    return p;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw_input(fmt::format("cannot write '{}'", path.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw_input(fmt::format("failed writing '{}'", path.string()));
}

void write_json(const std::filesystem::path& path, const Json& value) {
    write_file(path, value.dump(2) + "\n");
}

CsvText::CsvText(const std::vector<std::string>& header) { row(header); }

void CsvText::row(const std::vector<std::string>& fields) {
    std::ostringstream s;
    csv::write_row(s, fields);
    text_ += s.str();
}

std::string num(double value) { return csv::format_double(value); }

std::string file_stem(std::string_view name) {
    std::string out;
    for (char c : name) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
        out += keep ? c : '_';
    }
    return out.empty() ? "field" : out;
}

}  // namespace trendlab::cli
