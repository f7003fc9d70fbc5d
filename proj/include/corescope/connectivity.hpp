#ifndef CORESCOPE_CONNECTIVITY_HPP
#define CORESCOPE_CONNECTIVITY_HPP

#include <cstdint>
#include <vector>

#include "corescope/graph.hpp"
#include "corescope/kcore.hpp"

namespace corescope {

struct PairPathCheck {
    VertexId u = 0, v = 0;
    VertexId c_u = 0, c_v = 0;
    int disjoint_paths = 0;
    bool bound_satisfied = false;  // disjoint_paths >= min(c_u, c_v)
};

struct ClusterViolation {
    VertexId shell = 0;
    std::size_t cluster = 0;  // position in shell_clusters() order
    std::size_t upward_edges = 0;
};

struct UpwardEdgeReport {
    std::vector<ClusterViolation> violations;
    bool top_core_edge_connected = true;  // sampled pairs have >= k_max paths
    std::size_t top_core_pairs_checked = 0;
};

struct ConnectivityReport {
    std::vector<bool> core_connected;  // index k, k = 0..k_max (0 unused, true)
    std::vector<PairPathCheck> sampled_pairs;
    double violation_fraction = 0.0;
    UpwardEdgeReport upward;
};

/// Maximum number of pairwise edge-disjoint u-v paths: unit-capacity
/// max-flow with each undirected edge realized as two opposing arcs.
/// Reusable across queries on one graph.
class EdgeDisjointPathSolver {
public:
    explicit EdgeDisjointPathSolver(const Graph& g);
    int count(VertexId u, VertexId v);

private:
    VertexId n_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> arc_to_;
    std::vector<std::size_t> arc_pair_;  // index of the opposing arc
    std::vector<std::int8_t> cap_;
    std::vector<std::size_t> parent_arc_;
    std::vector<VertexId> queue_;
};

int edge_disjoint_paths(const Graph& g, VertexId u, VertexId v);

/// Connectivity of each core subgraph, k = 1..k_max (entry 0 is true by
/// convention). Cores of AS maps stay connected; this makes the claim
/// checkable per graph.
std::vector<bool> verify_cores_connected(const Graph& g, const ShellDecomposition& d);

/// Samples n_pairs random vertex pairs and checks that the number of
/// edge-disjoint paths reaches min(c_u, c_v).
ConnectivityReport verify_disjoint_path_bound(const Graph& g, const ShellDecomposition& d,
                                              std::size_t n_pairs, std::uint64_t seed);

/// Flags clusters below k_max with fewer upward edges than their shell
/// index, and spot-checks that the top core is k_max-edge-connected on up
/// to `top_core_pairs` sampled vertex pairs.
UpwardEdgeReport verify_shell_upward_edges(const Graph& g, const ShellDecomposition& d,
                                           std::size_t top_core_pairs = 30,
                                           std::uint64_t seed = 0);

}  // namespace corescope

#endif
