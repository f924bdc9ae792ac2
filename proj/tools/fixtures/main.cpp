// Writes the bundled fixture files into a directory.
#include <iostream>

#include "trendlab/fixtures/fixtures.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: trendlab-fixtures <output-dir>\n";
        return 2;
    }
    try {
        trendlab::fixtures::write_fixture_files(argv[1]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
