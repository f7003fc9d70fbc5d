#ifndef CORESCOPE_GRAPH_HPP
#define CORESCOPE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace corescope {

using VertexId = std::int32_t;

/// Immutable undirected simple graph in CSR form. Vertices are dense
/// indices 0..n-1; an optional label table maps them back to external
/// ids (AS numbers, file tokens). Self-loops and duplicate edges are
/// removed at construction, neighbor lists are sorted.
class Graph {
public:
    Graph() = default;

    /// Builds from index pairs. Self-loops dropped, duplicates collapsed.
    /// `labels` may be empty, in which case label(v) is the decimal index.
    static Graph from_edges(VertexId n,
                            std::vector<std::pair<VertexId, VertexId>> edges,
                            std::vector<std::string> labels = {});

    VertexId vertex_count() const { return n_; }
    std::size_t edge_count() const { return adj_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
    }
    VertexId max_degree() const;

    bool has_edge(VertexId u, VertexId v) const;

    bool has_labels() const { return !labels_.empty(); }
    std::string label(VertexId v) const;

    /// Edge list with u < v, sorted; labels via label().
    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    VertexId n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> adj_;
    std::vector<std::string> labels_;
};

struct GraphSummary {
    VertexId n = 0;
    std::size_t e = 0;
    double mean_degree = 0.0;  // 2e/n
    VertexId d_max = 0;
};

/// Builds a graph from labeled edge pairs. Labels are mapped to dense
/// indices in first-appearance order; duplicate edges and self-loops
/// are dropped.
Graph build_graph(std::span<const std::pair<std::string, std::string>> edge_pairs);

GraphSummary summarize(const Graph& g);

/// Connected component id per vertex, ids assigned in order of the
/// smallest vertex index contained. Returns component count in `count`.
std::vector<VertexId> connected_components(const Graph& g, VertexId& count);

bool is_connected(const Graph& g);

/// Induced subgraph on `vertices` (ascending indices expected). External
/// labels of the kept vertices are preserved, so identity survives
/// extraction even for graphs that were built without explicit labels.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Induced subgraph on the largest connected component; ties broken by
/// the component containing the smallest vertex index.
Graph giant_component(const Graph& g);

}  // namespace corescope

#endif
