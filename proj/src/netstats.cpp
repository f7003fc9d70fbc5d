#include "corescope/netstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace corescope {

std::vector<std::pair<VertexId, double>> cumulative_degree_distribution(const Graph& g) {
    const VertexId n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("empty graph");
    std::map<VertexId, std::size_t> counts;
    for (VertexId v = 0; v < n; ++v) ++counts[g.degree(v)];

    std::vector<std::pair<VertexId, double>> ccdf;
    ccdf.reserve(counts.size() + 1);
    if (!counts.count(0)) ccdf.emplace_back(0, 0.0);  // probability filled below
    for (const auto& [d, c] : counts) ccdf.emplace_back(d, static_cast<double>(c));
    // Sweep from the top: P_>(d) = fraction of vertices of degree > d.
    double above = 0.0;
    for (auto it = ccdf.rbegin(); it != ccdf.rend(); ++it) {
        const auto hit = counts.find(it->first);
        const double here = hit == counts.end() ? 0.0 : static_cast<double>(hit->second);
        it->second = above / n;
        above += here;
    }
    return ccdf;
}

std::vector<RescaledDegreeSample> rescaled_core_distributions(
    const Graph& g, const ShellDecomposition& d, std::span<const VertexId> core_indices) {
    std::vector<RescaledDegreeSample> out;
    for (VertexId k : core_indices) {
        if (k < 0 || k > d.k_max) continue;
        const Graph core = core_subgraph(g, d, k);
        if (core.vertex_count() == 0) continue;
        RescaledDegreeSample s;
        s.core_index = k;
        s.mean_degree = summarize(core).mean_degree;
        if (s.mean_degree <= 0.0) continue;
        s.values.reserve(static_cast<std::size_t>(core.vertex_count()));
        for (VertexId v = 0; v < core.vertex_count(); ++v)
            s.values.push_back(core.degree(v) / s.mean_degree);
        std::sort(s.values.begin(), s.values.end());
        out.push_back(std::move(s));
    }
    return out;
}

Spectrum avg_nearest_neighbor_degree(const Graph& g) {
    Spectrum s;
    std::map<VertexId, double> sums;
    double total = 0.0;
    std::size_t measured = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const VertexId dv = g.degree(v);
        if (dv == 0) continue;
        double acc = 0.0;
        for (VertexId u : g.neighbors(v)) acc += g.degree(u);
        const double mean_nb = acc / dv;
        sums[dv] += mean_nb;
        ++s.support_counts[dv];
        total += mean_nb;
        ++measured;
    }
    for (const auto& [d, sum] : sums)
        s.points[d] = sum / static_cast<double>(s.support_counts[d]);
    s.mean_value = measured == 0 ? 0.0 : total / static_cast<double>(measured);
    return s;
}

Spectrum clustering_spectrum(const Graph& g) {
    const VertexId n = g.vertex_count();
    Spectrum s;
    std::map<VertexId, double> sums;
    double total = 0.0;
    std::size_t measured = 0;
    std::vector<bool> mark(static_cast<std::size_t>(n), false);
    for (VertexId v = 0; v < n; ++v) {
        const VertexId dv = g.degree(v);
        if (dv < 2) continue;
        for (VertexId u : g.neighbors(v)) mark[u] = true;
        std::size_t links2 = 0;  // ordered neighbor pairs that are adjacent
        for (VertexId u : g.neighbors(v))
            for (VertexId w : g.neighbors(u))
                if (mark[w]) ++links2;
        for (VertexId u : g.neighbors(v)) mark[u] = false;
        const double cc = static_cast<double>(links2) /
                          (static_cast<double>(dv) * (dv - 1));
        sums[dv] += cc;
        ++s.support_counts[dv];
        total += cc;
        ++measured;
    }
    for (const auto& [d, sum] : sums)
        s.points[d] = sum / static_cast<double>(s.support_counts[d]);
    s.mean_value = measured == 0 ? 0.0 : total / static_cast<double>(measured);
    return s;
}

namespace {

/// Brandes dependency accumulation for the sources in [begin, end).
void betweenness_sources(const Graph& g, VertexId begin, VertexId end,
                         std::vector<double>& acc) {
    const VertexId n = g.vertex_count();
    std::vector<VertexId> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(n));

    for (VertexId s = begin; s < end; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const VertexId v = order[head];
            for (VertexId u : g.neighbors(v)) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    order.push_back(u);
                }
                if (dist[u] == dist[v] + 1) sigma[u] += sigma[v];
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const VertexId w = *it;
            for (VertexId u : g.neighbors(w))
                if (dist[u] == dist[w] - 1)
                    delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
            if (w != s) acc[w] += delta[w];
        }
    }
}

}  // namespace

CentralityTable betweenness(const Graph& g, unsigned threads) {
    const VertexId n = g.vertex_count();
    CentralityTable bc(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return bc;
    threads = std::max(1u, std::min(threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        betweenness_sources(g, 0, n, bc);
    } else {
        std::vector<std::vector<double>> partial(
            threads, std::vector<double>(static_cast<std::size_t>(n), 0.0));
        std::vector<std::thread> pool;
        const VertexId chunk = (n + static_cast<VertexId>(threads) - 1) /
                               static_cast<VertexId>(threads);
        for (unsigned t = 0; t < threads; ++t) {
            const VertexId lo = std::min<VertexId>(n, static_cast<VertexId>(t) * chunk);
            const VertexId hi = std::min<VertexId>(n, lo + chunk);
            pool.emplace_back(betweenness_sources, std::cref(g), lo, hi,
                              std::ref(partial[t]));
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial)
            for (VertexId v = 0; v < n; ++v) bc[v] += p[v];
    }
    // Ordered-pair accumulation counted each unordered pair twice.
    for (double& x : bc) x /= 2.0;
    return bc;
}

CentralityProfile shell_centrality_profile(const Graph& g, const ShellDecomposition& d,
                                           const CentralityTable& bc) {
    struct Acc {
        std::size_t count = 0;
        double sum = 0.0, sumsq = 0.0;
    };
    std::map<VertexId, Acc> by_shell;
    std::map<VertexId, Acc> by_degree;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto& s = by_shell[d.shell_index[v]];
        ++s.count;
        s.sum += bc[v];
        s.sumsq += bc[v] * bc[v];
        auto& q = by_degree[g.degree(v)];
        const double c = d.shell_index[v];
        ++q.count;
        q.sum += c;
        q.sumsq += c * c;
    }
    auto rows = [](const std::map<VertexId, Acc>& m) {
        std::vector<CentralityProfile::Row> out;
        out.reserve(m.size());
        for (const auto& [key, a] : m) {
            CentralityProfile::Row r;
            r.key = key;
            r.count = a.count;
            r.mean = a.sum / static_cast<double>(a.count);
            const double var =
                std::max(0.0, a.sumsq / static_cast<double>(a.count) - r.mean * r.mean);
            r.stddev = std::sqrt(var);
            out.push_back(r);
        }
        return out;
    };
    CentralityProfile p;
    p.bc_by_shell = rows(by_shell);
    p.shell_by_degree = rows(by_degree);
    return p;
}

double collapse_distance(std::span<const double> sample_a, std::span<const double> sample_b) {
    if (sample_a.empty() || sample_b.empty())
        throw std::invalid_argument("empty sample");
    std::vector<double> a(sample_a.begin(), sample_a.end());
    std::vector<double> b(sample_b.begin(), sample_b.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double best = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        best = std::max(best, std::abs(i / na - j / nb));
    }
    return best;
}

double spectrum_collapse_distance(const Spectrum& a, double mean_degree_a,
                                  const Spectrum& b, double mean_degree_b,
                                  std::size_t min_support) {
    if (mean_degree_a <= 0.0 || mean_degree_b <= 0.0)
        throw std::invalid_argument("non-positive mean degree");
    if (a.mean_value <= 0.0 || b.mean_value <= 0.0)
        throw std::invalid_argument("non-positive spectrum mean");

    struct Bin {
        double weighted = 0.0;
        std::size_t support = 0;
    };
    auto binned = [min_support](const Spectrum& s, double mean_degree) {
        std::map<int, Bin> bins;
        for (const auto& [d, y] : s.points) {
            const double x = d / mean_degree;
            const int bin = static_cast<int>(std::floor(std::log2(x)));
            const std::size_t w = s.support_counts.at(d);
            bins[bin].weighted += (y / s.mean_value) * static_cast<double>(w);
            bins[bin].support += w;
        }
        return bins;
    };
    const auto ba = binned(a, mean_degree_a);
    const auto bb = binned(b, mean_degree_b);
    double dist = 0.0;
    std::size_t common = 0;
    for (const auto& [bin, xa] : ba) {
        const auto it = bb.find(bin);
        if (it == bb.end()) continue;
        if (xa.support < min_support || it->second.support < min_support) continue;
        const double ya = xa.weighted / static_cast<double>(xa.support);
        const double yb = it->second.weighted / static_cast<double>(it->second.support);
        dist = std::max(dist, std::abs(ya - yb));
        ++common;
    }
    if (common == 0) throw std::runtime_error("no common spectrum support");
    return dist;
}

}  // namespace corescope
