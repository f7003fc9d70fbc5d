#include "corescope/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "corescope/rng.hpp"

namespace corescope {

EdgeDisjointPathSolver::EdgeDisjointPathSolver(const Graph& g) : n_(g.vertex_count()) {
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (VertexId v = 0; v < n_; ++v)
        offsets_[v + 1] = offsets_[v] + static_cast<std::size_t>(g.degree(v));
    arc_to_.resize(offsets_[n_]);
    arc_pair_.resize(offsets_[n_]);
    cap_.resize(offsets_[n_]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : g.neighbors(u)) {
            if (u >= v) continue;
            const std::size_t a = cursor[u]++;
            const std::size_t b = cursor[v]++;
            arc_to_[a] = v;
            arc_to_[b] = u;
            arc_pair_[a] = b;
            arc_pair_[b] = a;
        }
    parent_arc_.resize(static_cast<std::size_t>(n_));
    queue_.reserve(static_cast<std::size_t>(n_));
}

int EdgeDisjointPathSolver::count(VertexId s, VertexId t) {
    if (s < 0 || t < 0 || s >= n_ || t >= n_)
        throw std::invalid_argument("vertex out of range");
    if (s == t) throw std::invalid_argument("endpoints must differ");
    std::fill(cap_.begin(), cap_.end(), static_cast<std::int8_t>(1));

    constexpr std::size_t kNoArc = static_cast<std::size_t>(-1);
    int flow = 0;
    while (true) {
        // BFS over residual arcs.
        std::fill(parent_arc_.begin(), parent_arc_.end(), kNoArc);
        queue_.clear();
        queue_.push_back(s);
        parent_arc_[s] = kNoArc - 1;  // mark visited
        bool reached = false;
        for (std::size_t head = 0; head < queue_.size() && !reached; ++head) {
            const VertexId v = queue_[head];
            for (std::size_t a = offsets_[v]; a < offsets_[v + 1]; ++a) {
                if (cap_[a] == 0) continue;
                const VertexId w = arc_to_[a];
                if (parent_arc_[w] != kNoArc) continue;
                parent_arc_[w] = a;
                if (w == t) {
                    reached = true;
                    break;
                }
                queue_.push_back(w);
            }
        }
        if (!reached) break;
        // Augment one unit along the parent chain.
        VertexId v = t;
        while (v != s) {
            const std::size_t a = parent_arc_[v];
            cap_[a] = 0;
            cap_[arc_pair_[a]] = 1;
            VertexId u = arc_to_[arc_pair_[a]];
            v = u;
        }
        ++flow;
    }
    return flow;
}

int edge_disjoint_paths(const Graph& g, VertexId u, VertexId v) {
    EdgeDisjointPathSolver solver(g);
    return solver.count(u, v);
}

std::vector<bool> verify_cores_connected(const Graph& g, const ShellDecomposition& d) {
    std::vector<bool> connected(static_cast<std::size_t>(d.k_max) + 1, true);
    for (VertexId k = 1; k <= d.k_max; ++k)
        connected[k] = is_connected(core_subgraph(g, d, k));
    return connected;
}

ConnectivityReport verify_disjoint_path_bound(const Graph& g, const ShellDecomposition& d,
                                              std::size_t n_pairs, std::uint64_t seed) {
    if (g.vertex_count() < 2) throw std::invalid_argument("need at least two vertices");
    ConnectivityReport report;
    report.core_connected = verify_cores_connected(g, d);

    Rng rng(seed);
    EdgeDisjointPathSolver solver(g);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < n_pairs; ++i) {
        const auto u = static_cast<VertexId>(rng.below(g.vertex_count()));
        VertexId v = u;
        while (v == u) v = static_cast<VertexId>(rng.below(g.vertex_count()));
        PairPathCheck check;
        check.u = u;
        check.v = v;
        check.c_u = d.shell_index[u];
        check.c_v = d.shell_index[v];
        check.disjoint_paths = solver.count(u, v);
        check.bound_satisfied = check.disjoint_paths >= std::min(check.c_u, check.c_v);
        if (!check.bound_satisfied) ++violations;
        report.sampled_pairs.push_back(check);
    }
    report.violation_fraction =
        n_pairs == 0 ? 0.0 : static_cast<double>(violations) / static_cast<double>(n_pairs);
    return report;
}

UpwardEdgeReport verify_shell_upward_edges(const Graph& g, const ShellDecomposition& d,
                                           std::size_t top_core_pairs, std::uint64_t seed) {
    UpwardEdgeReport report;
    const auto clusters = shell_clusters(g, d);
    std::size_t id = 0;
    VertexId prev_shell = -1;
    for (const auto& q : clusters) {
        id = q.index == prev_shell ? id + 1 : 0;
        prev_shell = q.index;
        if (q.index >= d.k_max || q.index < 1) continue;
        if (q.upward_edge_count < static_cast<std::size_t>(q.index))
            report.violations.push_back(
                {q.index, id, q.upward_edge_count});
    }

    // Spot-check k_max-edge-connectivity of the central core.
    const Graph top = core_subgraph(g, d, d.k_max);
    if (top.vertex_count() >= 2 && d.k_max >= 1) {
        Rng rng(seed);
        EdgeDisjointPathSolver solver(top);
        const std::size_t all_pairs =
            static_cast<std::size_t>(top.vertex_count()) * (top.vertex_count() - 1) / 2;
        const std::size_t checks = std::min(top_core_pairs, all_pairs);
        for (std::size_t i = 0; i < checks; ++i) {
            const auto u = static_cast<VertexId>(rng.below(top.vertex_count()));
            VertexId v = u;
            while (v == u) v = static_cast<VertexId>(rng.below(top.vertex_count()));
            ++report.top_core_pairs_checked;
            if (solver.count(u, v) < d.k_max) {
                report.top_core_edge_connected = false;
                break;
            }
        }
    }
    return report;
}

}  // namespace corescope
