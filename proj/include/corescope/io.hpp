#ifndef CORESCOPE_IO_HPP
#define CORESCOPE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "corescope/graph.hpp"

namespace corescope {

/// Malformed or unreadable input data. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the edge-list text format: one edge per line, two
/// whitespace-separated tokens; '#' lines and blank lines ignored.
/// Throws DataError naming the offending line on malformed input.
Graph load_edge_list(const std::filesystem::path& path);

/// Writes the same format, one "label label" line per edge.
void write_edge_list(const Graph& g, const std::filesystem::path& path);

/// Fixed decimal formatting for every real emitted to CSV/JSON artifacts:
/// 9 significant digits, bit-stable across runs.
std::string format_real(double x);

/// FNV-1a 64-bit content digest, hex encoded, for input provenance in
/// manifests.
std::string file_digest(const std::filesystem::path& path);

}  // namespace corescope

#endif
