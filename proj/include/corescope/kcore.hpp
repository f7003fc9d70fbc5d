#ifndef CORESCOPE_KCORE_HPP
#define CORESCOPE_KCORE_HPP

#include <map>
#include <vector>

#include "corescope/graph.hpp"

namespace corescope {

/// Result of a full shell decomposition. shell_index[v] is the largest k
/// such that v belongs to the k-core; degree-0 vertices get index 0.
struct ShellDecomposition {
    std::vector<VertexId> shell_index;
    VertexId k_max = 0;
    std::vector<std::vector<VertexId>> shells;  // size k_max+1, shells[k] sorted
};

/// A connected set of vertices sharing one shell index, annotated with the
/// number of edges leaving it toward strictly higher shells.
struct ShellCluster {
    VertexId index = 0;
    std::vector<VertexId> members;
    std::size_t upward_edge_count = 0;
};

/// Linear-time shell decomposition via bucketed degree ordering
/// (Batagelj-Zversnik). O(n+e) time, O(n) extra memory.
ShellDecomposition decompose(const Graph& g);

/// Reference oracle: literal recursive pruning, one k at a time. A vertex
/// deleted while pruning toward the k-core has shell index k-1. Quadratic;
/// intended for graphs up to a few thousand vertices.
ShellDecomposition brute_force_decompose(const Graph& g);

/// Induced subgraph on vertices of shell index >= k. k = 0 returns the
/// whole graph, k > k_max an empty one.
Graph core_subgraph(const Graph& g, const ShellDecomposition& d, VertexId k);

/// |S_k| for k = 0..k_max (index 0 counts isolated vertices; consumers
/// reporting per the k >= 1 convention skip it).
std::vector<std::size_t> shell_sizes(const ShellDecomposition& d);

/// Connected clusters of every shell, each with its upward edge count.
/// Ordered by (shell index, smallest member).
std::vector<ShellCluster> shell_clusters(const Graph& g, const ShellDecomposition& d);

/// Least-squares slope of log|S_k| vs log k over non-zero shells with
/// k_lo <= k <= k_hi. Throws std::invalid_argument with "insufficient
/// shells for fit" when fewer than 3 such shells exist.
double fit_shell_powerlaw(const std::map<VertexId, std::size_t>& sizes,
                          VertexId k_lo, VertexId k_hi);

/// Convenience overload over a dense size vector indexed by shell.
double fit_shell_powerlaw(const std::vector<std::size_t>& sizes,
                          VertexId k_lo, VertexId k_hi);

}  // namespace corescope

#endif
