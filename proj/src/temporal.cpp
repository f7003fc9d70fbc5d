#include "corescope/temporal.hpp"

#include <stdexcept>
#include <unordered_map>

namespace corescope {

MapComparison compare_decompositions(const Graph& g_a, const ShellDecomposition& d_a,
                                     const Graph& g_b, const ShellDecomposition& d_b) {
    std::unordered_map<std::string, VertexId> index_b;
    index_b.reserve(static_cast<std::size_t>(g_b.vertex_count()));
    for (VertexId v = 0; v < g_b.vertex_count(); ++v) index_b.emplace(g_b.label(v), v);

    MapComparison cmp;
    auto& m = cmp.matrix;
    m.rows = static_cast<std::size_t>(d_a.k_max) + 1;
    m.cols = static_cast<std::size_t>(d_b.k_max) + 1;
    m.counts.assign(m.rows * m.cols, 0);

    // Degree-0 vertices are invisible to an edge-list representation, so
    // they count as absent from the map they sit in.
    std::size_t diagonal = 0;
    std::vector<bool> seen_in_b(static_cast<std::size_t>(g_b.vertex_count()), false);
    for (VertexId v = 0; v < g_a.vertex_count(); ++v) {
        if (g_a.degree(v) == 0) continue;
        const VertexId x = d_a.shell_index[v];
        const auto it = index_b.find(g_a.label(v));
        if (it == index_b.end() || g_b.degree(it->second) == 0) {
            ++m.counts[static_cast<std::size_t>(x) * m.cols + 0];
            continue;
        }
        seen_in_b[it->second] = true;
        const VertexId y = d_b.shell_index[it->second];
        ++m.counts[static_cast<std::size_t>(x) * m.cols + static_cast<std::size_t>(y)];
        ++cmp.common_count;
        if (x == y) ++diagonal;
    }
    for (VertexId v = 0; v < g_b.vertex_count(); ++v) {
        if (seen_in_b[v] || g_b.degree(v) == 0) continue;
        const VertexId y = d_b.shell_index[v];
        ++m.counts[static_cast<std::size_t>(y)];  // row 0
    }
    if (cmp.common_count == 0) throw std::invalid_argument("disjoint label sets");
    cmp.diagonal_mass = static_cast<double>(diagonal) / static_cast<double>(cmp.common_count);

    m.p.assign(m.rows * m.cols, 0.0);
    for (std::size_t x = 0; x < m.rows; ++x) {
        std::int64_t row_total = 0;
        for (std::size_t y = 0; y < m.cols; ++y) row_total += m.counts[x * m.cols + y];
        if (row_total == 0) continue;
        for (std::size_t y = 0; y < m.cols; ++y)
            m.p[x * m.cols + y] =
                static_cast<double>(m.counts[x * m.cols + y]) / static_cast<double>(row_total);
    }

    auto& io = cmp.inout;
    io.in_dist.assign(m.cols, 0.0);
    io.out_dist.assign(m.rows, 0.0);
    for (std::size_t y = 0; y < m.cols; ++y) {
        io.in_count += static_cast<std::size_t>(m.counts[y]);  // row 0
        io.in_dist[y] = static_cast<double>(m.counts[y]);
    }
    for (std::size_t x = 0; x < m.rows; ++x) {
        io.out_count += static_cast<std::size_t>(m.counts[x * m.cols]);
        io.out_dist[x] = static_cast<double>(m.counts[x * m.cols]);
    }
    // Entry (0,0) is structurally empty; don't let it contaminate either side.
    if (io.in_count > 0)
        for (double& p : io.in_dist) p /= static_cast<double>(io.in_count);
    if (io.out_count > 0)
        for (double& p : io.out_dist) p /= static_cast<double>(io.out_count);
    return cmp;
}

MapComparison compare_maps(const Graph& g_a, const Graph& g_b) {
    const auto d_a = decompose(g_a);
    const auto d_b = decompose(g_b);
    return compare_decompositions(g_a, d_a, g_b, d_b);
}

}  // namespace corescope
