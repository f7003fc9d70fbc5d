#ifndef CORESCOPE_TEMPORAL_HPP
#define CORESCOPE_TEMPORAL_HPP

#include <cstdint>
#include <vector>

#include "corescope/graph.hpp"
#include "corescope/kcore.hpp"

namespace corescope {

/// Shell-index transition probabilities between two maps matched by label.
/// Row x, column y: probability that a vertex of shell index x in map A
/// has shell index y in map B. Row 0 holds vertices absent from A, column
/// 0 vertices absent from B. Rows are normalized independently.
struct TransitionMatrix {
    std::size_t rows = 0;  // k_max_a + 1
    std::size_t cols = 0;  // k_max_b + 1
    std::vector<std::int64_t> counts;  // row-major
    std::vector<double> p;             // row-normalized, row-major

    double at(std::size_t x, std::size_t y) const { return p[x * cols + y]; }
    std::int64_t count_at(std::size_t x, std::size_t y) const {
        return counts[x * cols + y];
    }
};

/// Shell-index distributions of vertices present in only one map:
/// in_dist[c] for vertices entering (only in B, measured in B),
/// out_dist[c] for vertices disappearing (only in A, measured in A).
struct InOutProfile {
    std::vector<double> in_dist;
    std::vector<double> out_dist;
    std::size_t in_count = 0;
    std::size_t out_count = 0;
};

struct MapComparison {
    TransitionMatrix matrix;
    InOutProfile inout;
    double diagonal_mass = 0.0;  // P(index unchanged | present in both)
    std::size_t common_count = 0;
};

/// Decomposes both maps, aligns vertices by external label, and returns
/// the transition matrix, IN/OUT profiles and diagonal mass. Throws
/// std::invalid_argument("disjoint label sets") when no label is shared.
MapComparison compare_maps(const Graph& g_a, const Graph& g_b);

/// Same comparison when decompositions are already available.
MapComparison compare_decompositions(const Graph& g_a, const ShellDecomposition& d_a,
                                     const Graph& g_b, const ShellDecomposition& d_b);

}  // namespace corescope

#endif
