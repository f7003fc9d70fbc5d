#include "corescope/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "corescope/rng.hpp"

namespace corescope {

namespace {

std::uint64_t pack(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

/// BFS from `s` recording hop distance, the first-discovered parent (USP
/// tree) and the shortest-path count (for RSP path sampling).
struct BfsView {
    std::vector<VertexId> dist;
    std::vector<VertexId> parent;
    std::vector<double> sigma;
};

void bfs_from(const Graph& g, VertexId s, BfsView& view) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    view.dist.assign(n, -1);
    view.parent.assign(n, -1);
    view.sigma.assign(n, 0.0);
    std::vector<VertexId> queue;
    queue.reserve(n);
    view.dist[s] = 0;
    view.sigma[s] = 1.0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        for (VertexId u : g.neighbors(v)) {
            if (view.dist[u] == -1) {
                view.dist[u] = view.dist[v] + 1;
                view.parent[u] = v;
                queue.push_back(u);
            }
            if (view.dist[u] == view.dist[v] + 1) view.sigma[u] += view.sigma[v];
        }
    }
}

}  // namespace

SampleResult traceroute_sample(const Graph& g, const SamplingConfig& cfg) {
    const VertexId n = g.vertex_count();
    if (cfg.n_sources < 1 || cfg.n_targets < 1)
        throw std::invalid_argument("need at least one source and one target");
    if (static_cast<std::int64_t>(cfg.n_sources) + cfg.n_targets > n)
        throw std::invalid_argument("sources plus targets exceed vertex count");

    Rng rng(cfg.seed);
    // Disjoint sources and targets: one partial Fisher-Yates pass over the
    // vertex ids hands out both sets without replacement.
    std::vector<VertexId> ids(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) ids[v] = v;
    const auto picks = static_cast<std::size_t>(cfg.n_sources) + cfg.n_targets;
    for (std::size_t i = 0; i < picks; ++i) {
        const std::size_t j = i + rng.below(ids.size() - i);
        std::swap(ids[i], ids[j]);
    }
    const std::span<const VertexId> sources(ids.data(), cfg.n_sources);
    const std::span<const VertexId> targets(ids.data() + cfg.n_sources, cfg.n_targets);

    SampleResult result;
    result.effort = cfg.effort(n);
    std::unordered_set<std::uint64_t> edge_set;
    std::vector<std::pair<VertexId, VertexId>> edges;  // discovery order
    auto add_edge = [&](VertexId a, VertexId b) {
        if (edge_set.insert(pack(a, b)).second) edges.emplace_back(a, b);
    };

    BfsView view;
    for (VertexId s : sources) {
        bfs_from(g, s, view);
        for (VertexId t : targets) {
            if (view.dist[t] == -1) {
                ++result.skipped_pairs;
                continue;
            }
            if (cfg.strategy == PathStrategy::Usp) {
                for (VertexId v = t; v != s; v = view.parent[v])
                    add_edge(v, view.parent[v]);
            } else {
                // Walk back choosing each predecessor with probability
                // sigma(pred)/sigma-sum, which samples uniformly among all
                // shortest s-t paths.
                VertexId v = t;
                while (v != s) {
                    double total = 0.0;
                    for (VertexId u : g.neighbors(v))
                        if (view.dist[u] == view.dist[v] - 1) total += view.sigma[u];
                    double pick = rng.real01() * total;
                    VertexId chosen = -1;
                    for (VertexId u : g.neighbors(v)) {
                        if (view.dist[u] != view.dist[v] - 1) continue;
                        chosen = u;
                        pick -= view.sigma[u];
                        if (pick <= 0.0) break;
                    }
                    add_edge(v, chosen);
                    v = chosen;
                }
            }
        }
    }

    // Re-index the discovered subgraph, carrying the original labels.
    std::vector<VertexId> remap(static_cast<std::size_t>(n), -1);
    std::vector<std::string> labels;
    std::vector<std::pair<VertexId, VertexId>> out_edges;
    out_edges.reserve(edges.size());
    auto intern = [&](VertexId v) {
        if (remap[v] == -1) {
            remap[v] = static_cast<VertexId>(labels.size());
            labels.push_back(g.label(v));
        }
        return remap[v];
    };
    for (auto [a, b] : edges) {
        const VertexId u = intern(a);  // sequenced: discovery order wins
        const VertexId v = intern(b);
        out_edges.emplace_back(u, v);
    }
    const auto sampled_n = static_cast<VertexId>(labels.size());
    result.graph = Graph::from_edges(sampled_n, std::move(out_edges), std::move(labels));
    return result;
}

namespace {

double pearson(std::span<const double> xs, std::span<const double> ys) {
    const auto n = static_cast<double>(xs.size());
    if (xs.size() < 2) return 0.0;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

std::vector<BiasCase> bias_experiment(const Graph& g, VertexId n_sources,
                                      std::span<const double> efforts,
                                      PathStrategy strategy,
                                      std::span<const std::uint64_t> seeds) {
    const VertexId n = g.vertex_count();
    const auto original = decompose(g);
    std::unordered_map<std::string, VertexId> orig_index;
    orig_index.reserve(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) orig_index.emplace(g.label(v), v);

    std::vector<BiasCase> cases;
    for (double eps : efforts) {
        const auto n_targets = static_cast<VertexId>(
            std::llround(eps * static_cast<double>(n) / static_cast<double>(n_sources)));
        if (n_targets < 1 || static_cast<std::int64_t>(n_sources) + n_targets > n)
            throw std::invalid_argument("effort incompatible with graph size");
        for (std::uint64_t seed : seeds) {
            SamplingConfig cfg;
            cfg.n_sources = n_sources;
            cfg.n_targets = n_targets;
            cfg.strategy = strategy;
            cfg.seed = seed;
            auto sample = traceroute_sample(g, cfg);
            const auto sampled = decompose(sample.graph);

            BiasCase c;
            c.effort = eps;
            c.seed = seed;
            c.n_targets = n_targets;
            c.skipped_pairs = sample.skipped_pairs;
            c.sampled_summary = summarize(sample.graph);
            c.k_max_original = original.k_max;
            c.k_max_sampled = sampled.k_max;
            c.shell_sizes_sampled = shell_sizes(sampled);
            c.comparison = compare_decompositions(g, original, sample.graph, sampled);

            // Pearson correlation of (original, sampled) shell indices over
            // the discovered vertices.
            std::vector<double> xs, ys;
            xs.reserve(static_cast<std::size_t>(sample.graph.vertex_count()));
            ys.reserve(xs.capacity());
            for (VertexId v = 0; v < sample.graph.vertex_count(); ++v) {
                const auto it = orig_index.find(sample.graph.label(v));
                if (it == orig_index.end()) continue;
                xs.push_back(original.shell_index[it->second]);
                ys.push_back(sampled.shell_index[v]);
            }
            c.shell_index_correlation = pearson(xs, ys);
            cases.push_back(std::move(c));
        }
    }
    return cases;
}

}  // namespace corescope
