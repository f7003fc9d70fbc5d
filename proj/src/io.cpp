#include "corescope/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace corescope {

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open input file: " + path.string());
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string a, b, extra;
        if (!(ss >> a)) continue;      // blank line
        if (a[0] == '#') continue;     // comment
        if (!(ss >> b) || (ss >> extra)) {
            throw DataError(path.string() + ":" + std::to_string(line_no) +
                            ": expected two whitespace-separated tokens");
        }
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return build_graph(pairs);
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open output file: " + path.string());
    for (const auto& [u, v] : g.edges())
        out << g.label(u) << ' ' << g.label(v) << '\n';
    if (!out) throw DataError("write failed: " + path.string());
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open input file: " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const auto got = static_cast<std::size_t>(in.gcount());
        for (std::size_t i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
        if (!in) break;
    }
    char out[32];
    std::snprintf(out, sizeof(out), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(h));
    return out;
}

}  // namespace corescope
