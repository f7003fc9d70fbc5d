#include "corescope/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace corescope {

Graph Graph::from_edges(VertexId n,
                        std::vector<std::pair<VertexId, VertexId>> edges,
                        std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!labels.empty() && static_cast<VertexId>(labels.size()) != n)
        throw std::invalid_argument("label table size does not match vertex count");

    std::vector<std::uint64_t> packed;
    packed.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        packed.push_back((static_cast<std::uint64_t>(u) << 32) |
                         static_cast<std::uint32_t>(v));
    }
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

    Graph g;
    g.n_ = n;
    g.labels_ = std::move(labels);
    std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (auto p : packed) {
        ++deg[(p >> 32) + 1];
        ++deg[(p & 0xffffffffu) + 1];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v + 1];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto p : packed) {
        auto u = static_cast<VertexId>(p >> 32);
        auto v = static_cast<VertexId>(p & 0xffffffffu);
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // Sorted input pairs already yield sorted lists for the low endpoint;
    // the high endpoint side needs an explicit pass.
    for (VertexId v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    return g;
}

VertexId Graph::max_degree() const {
    VertexId d = 0;
    for (VertexId v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::label(VertexId v) const {
    if (labels_.empty()) return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(std::span<const std::pair<std::string, std::string>> edge_pairs) {
    std::unordered_map<std::string, VertexId> index;
    std::vector<std::string> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(edge_pairs.size());
    auto intern = [&](const std::string& s) {
        auto [it, inserted] = index.try_emplace(s, static_cast<VertexId>(labels.size()));
        if (inserted) labels.push_back(s);
        return it->second;
    };
    for (const auto& [a, b] : edge_pairs) {
        const VertexId u = intern(a);  // sequenced: first appearance wins
        const VertexId v = intern(b);
        edges.emplace_back(u, v);
    }
    const auto n = static_cast<VertexId>(labels.size());
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

GraphSummary summarize(const Graph& g) {
    GraphSummary s;
    s.n = g.vertex_count();
    s.e = g.edge_count();
    s.mean_degree = s.n == 0 ? 0.0 : 2.0 * static_cast<double>(s.e) / s.n;
    s.d_max = g.max_degree();
    return s;
}

std::vector<VertexId> connected_components(const Graph& g, VertexId& count) {
    const VertexId n = g.vertex_count();
    std::vector<VertexId> comp(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> stack;
    count = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbors(v)) {
                if (comp[u] == -1) {
                    comp[u] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    VertexId count = 0;
    connected_components(g, count);
    return count == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<VertexId> remap(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    VertexId next = 0;
    for (VertexId v : vertices) {
        remap[v] = next++;
        labels.push_back(g.label(v));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v : vertices)
        for (VertexId u : g.neighbors(v))
            if (v < u && remap[u] != -1) edges.emplace_back(remap[v], remap[u]);
    return Graph::from_edges(next, std::move(edges), std::move(labels));
}

Graph giant_component(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    VertexId count = 0;
    auto comp = connected_components(g, count);
    std::vector<std::size_t> sizes(static_cast<std::size_t>(count), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) ++sizes[comp[v]];
    // First maximal component also contains the smallest vertex index.
    VertexId best = 0;
    for (VertexId c = 1; c < count; ++c)
        if (sizes[c] > sizes[best]) best = c;
    std::vector<VertexId> keep;
    keep.reserve(sizes[best]);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (comp[v] == best) keep.push_back(v);
    return induced_subgraph(g, keep);
}

}  // namespace corescope
