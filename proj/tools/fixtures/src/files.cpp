#include <fstream>

#include <fmt/format.h>

#include "trendlab/corpus/time_series.hpp"
#include "trendlab/csv.hpp"
#include "trendlab/error.hpp"
#include "trendlab/fixtures/fixtures.hpp"

namespace trendlab::fixtures {

namespace {

std::ofstream open(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_input("cannot write " + path.string());
    return out;
}

void write_corpus_file(const std::filesystem::path& path, const corpus::Corpus& c) {
    auto out = open(path);
    corpus::write_corpus(out, c);
}

}  // namespace

void write_fixture_files(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_corpus_file(dir / "corpus.jsonl", demo_corpus());
    write_corpus_file(dir / "overfit.jsonl", overfit_corpus(1));
    write_corpus_file(dir / "generated.jsonl", generated_text_corpus(400, 7));
    write_corpus_file(dir / "cliques.jsonl", corpus_from_graph(planted_two_cliques(1).graph));
    {
        auto out = open(dir / "fields.txt");
        out << demo_fields();
    }
    auto out = open(dir / "prices.csv");
    out << "date,close\n";
    for (const auto& p : demo_prices().entries) {
        csv::write_row(out, {corpus::format_date(p.date), fmt::format("{:.2f}", p.close)});
    }
}

}  // namespace trendlab::fixtures
