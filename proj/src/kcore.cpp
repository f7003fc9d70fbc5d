#include "corescope/kcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace corescope {

namespace {

std::vector<std::vector<VertexId>> collect_shells(const std::vector<VertexId>& index,
                                                  VertexId k_max) {
    std::vector<std::vector<VertexId>> shells(static_cast<std::size_t>(k_max) + 1);
    for (VertexId v = 0; v < static_cast<VertexId>(index.size()); ++v)
        shells[index[v]].push_back(v);
    return shells;
}

}  // namespace

ShellDecomposition decompose(const Graph& g) {
    const VertexId n = g.vertex_count();
    ShellDecomposition d;
    d.shell_index.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        d.shells.resize(1);
        return d;
    }

    std::vector<VertexId> deg(static_cast<std::size_t>(n));
    VertexId max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    // Bin-sort vertices by degree: vert[] holds vertices ordered by current
    // degree, pos[] their positions, bin[d] the start of degree class d.
    std::vector<std::size_t> bin(static_cast<std::size_t>(max_deg) + 2, 0);
    for (VertexId v = 0; v < n; ++v) ++bin[deg[v] + 1];
    for (std::size_t i = 1; i < bin.size(); ++i) bin[i] += bin[i - 1];
    std::vector<VertexId> vert(static_cast<std::size_t>(n));
    std::vector<std::size_t> pos(static_cast<std::size_t>(n));
    {
        std::vector<std::size_t> cursor(bin.begin(), bin.end() - 1);
        for (VertexId v = 0; v < n; ++v) {
            pos[v] = cursor[deg[v]]++;
            vert[pos[v]] = v;
        }
    }

    // Peel in degree order; when v is processed its current degree is its
    // shell index. Neighbors with larger current degree slide one degree
    // class down via a positional swap with the class boundary.
    for (std::size_t i = 0; i < vert.size(); ++i) {
        const VertexId v = vert[i];
        d.shell_index[v] = deg[v];
        for (VertexId u : g.neighbors(v)) {
            if (deg[u] <= deg[v]) continue;
            const std::size_t upos = pos[u];
            const std::size_t wpos = bin[deg[u]];
            const VertexId w = vert[wpos];
            if (u != w) {
                std::swap(vert[upos], vert[wpos]);
                pos[u] = wpos;
                pos[w] = upos;
            }
            ++bin[deg[u]];
            --deg[u];
        }
    }

    d.k_max = *std::max_element(d.shell_index.begin(), d.shell_index.end());
    d.shells = collect_shells(d.shell_index, d.k_max);
    return d;
}

ShellDecomposition brute_force_decompose(const Graph& g) {
    const VertexId n = g.vertex_count();
    ShellDecomposition d;
    d.shell_index.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        d.shells.resize(1);
        return d;
    }

    std::vector<VertexId> deg(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    VertexId remaining = n;

    for (VertexId k = 1; remaining > 0; ++k) {
        // Delete all vertices of degree < k until fixpoint; anything removed
        // in this round survived the (k-1)-core but not the k-core.
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexId v = 0; v < n; ++v) {
                if (!alive[v] || deg[v] >= k) continue;
                alive[v] = false;
                --remaining;
                d.shell_index[v] = k - 1;
                for (VertexId u : g.neighbors(v))
                    if (alive[u]) --deg[u];
                changed = true;
            }
        }
    }

    d.k_max = *std::max_element(d.shell_index.begin(), d.shell_index.end());
    d.shells = collect_shells(d.shell_index, d.k_max);
    return d;
}

Graph core_subgraph(const Graph& g, const ShellDecomposition& d, VertexId k) {
    if (k < 0) throw std::invalid_argument("negative core order");
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (d.shell_index[v] >= k) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<std::size_t> shell_sizes(const ShellDecomposition& d) {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(d.k_max) + 1, 0);
    for (VertexId c : d.shell_index) ++sizes[c];
    return sizes;
}

std::vector<ShellCluster> shell_clusters(const Graph& g, const ShellDecomposition& d) {
    const VertexId n = g.vertex_count();
    std::vector<ShellCluster> clusters;
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (visited[s]) continue;
        const VertexId c = d.shell_index[s];
        ShellCluster q;
        q.index = c;
        visited[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            q.members.push_back(v);
            for (VertexId u : g.neighbors(v)) {
                if (d.shell_index[u] > c) ++q.upward_edge_count;
                if (d.shell_index[u] == c && !visited[u]) {
                    visited[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(q.members.begin(), q.members.end());
        clusters.push_back(std::move(q));
    }
    std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.members.front() < b.members.front();
    });
    return clusters;
}

double fit_shell_powerlaw(const std::map<VertexId, std::size_t>& sizes,
                          VertexId k_lo, VertexId k_hi) {
    std::vector<double> xs, ys;
    for (const auto& [k, size] : sizes) {
        if (k < std::max<VertexId>(k_lo, 1) || k > k_hi || size == 0) continue;
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(static_cast<double>(size)));
    }
    if (xs.size() < 3) throw std::invalid_argument("insufficient shells for fit");
    const double xm = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double ym = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - xm) * (xs[i] - xm);
        sxy += (xs[i] - xm) * (ys[i] - ym);
    }
    if (sxx == 0.0) throw std::invalid_argument("insufficient shells for fit");
    return sxy / sxx;
}

double fit_shell_powerlaw(const std::vector<std::size_t>& sizes,
                          VertexId k_lo, VertexId k_hi) {
    std::map<VertexId, std::size_t> m;
    for (std::size_t k = 0; k < sizes.size(); ++k)
        m[static_cast<VertexId>(k)] = sizes[k];
    return fit_shell_powerlaw(m, k_lo, k_hi);
}

}  // namespace corescope
