#include "corescope/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "corescope/rng.hpp"

namespace corescope {

namespace {

std::uint64_t pack(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

/// Shared growth process for BA and BRITE. Every accepted edge pushes both
/// endpoints onto the stub list, so drawing a uniform stub is exactly
/// degree-proportional selection.
Graph grow_preferential(VertexId n, VertexId m, double p_extra, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n <= m) throw std::invalid_argument("n must exceed m");
    if (p_extra < 0.0 || p_extra >= 1.0)
        throw std::invalid_argument("p_extra must lie in [0, 1)");

    Rng rng(seed);
    const VertexId m0 = std::min<VertexId>(n, m + 2);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> stubs;
    std::unordered_set<std::uint64_t> seen;
    auto add_edge = [&](VertexId a, VertexId b) {
        if (a == b) return false;
        if (!seen.insert(pack(a, b)).second) return false;
        edges.emplace_back(a, b);
        stubs.push_back(a);
        stubs.push_back(b);
        return true;
    };

    for (VertexId i = 0; i < m0; ++i)
        for (VertexId j = i + 1; j < m0; ++j) add_edge(i, j);

    std::vector<VertexId> targets;
    for (VertexId v = m0; v < n; ++v) {
        targets.clear();
        while (static_cast<VertexId>(targets.size()) < m) {
            VertexId t = stubs[rng.below(stubs.size())];
            if (t != v && std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (VertexId t : targets) add_edge(v, t);

        if (p_extra > 0.0 && rng.real01() < p_extra) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                VertexId a = stubs[rng.below(stubs.size())];
                VertexId b = stubs[rng.below(stubs.size())];
                if (add_edge(a, b)) break;
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

std::uint64_t DegreeSequence::even_sum() const {
    std::uint64_t s = 0;
    for (VertexId d : degrees) s += static_cast<std::uint64_t>(d);
    return s;
}

Graph gen_er(VertexId n, std::size_t e, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    const std::size_t max_edges =
        static_cast<std::size_t>(n) * (n > 0 ? static_cast<std::size_t>(n - 1) : 0) / 2;
    if (e > max_edges) throw std::invalid_argument("edge count exceeds n(n-1)/2");

    Rng rng(seed);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(e * 2);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(e);
    while (edges.size() < e) {
        auto u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        auto v = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (seen.insert(pack(u, v)).second) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_ba(VertexId n, VertexId m, std::uint64_t seed) {
    return grow_preferential(n, m, 0.0, seed);
}

Graph gen_brite(VertexId n, VertexId m, double p_extra, std::uint64_t seed) {
    return grow_preferential(n, m, p_extra, seed);
}

DegreeSequence sample_degree_sequence(GeneratorKind kind, const DegreeLawParams& params,
                                      VertexId n, std::uint64_t seed) {
    if (kind != GeneratorKind::ConfigPareto && kind != GeneratorKind::ConfigWeibull)
        throw std::invalid_argument("degree sequences exist only for configuration kinds");
    if (params.min_degree < 1 || params.min_degree >= n)
        throw std::invalid_argument("min_degree out of range");
    if (kind == GeneratorKind::ConfigPareto && params.gamma <= 2.0)
        throw std::invalid_argument("gamma must exceed 2 for a finite mean");
    if (params.weibull_a <= 0.0 || params.weibull_c <= 0.0)
        throw std::invalid_argument("Weibull parameters must be positive");

    Rng rng(seed);
    const VertexId max_k = std::min(params.max_degree, n - 1);
    if (max_k < params.min_degree) throw std::invalid_argument("max_degree below min_degree");

    auto draw = [&]() {
        while (true) {
            double kd;
            if (kind == GeneratorKind::ConfigPareto) {
                const double xm = static_cast<double>(params.min_degree) - 0.5;
                const double x =
                    xm * std::pow(rng.real01_open_low(), -1.0 / (params.gamma - 1.0));
                kd = std::floor(x + 0.5);
            } else {
                const double u = rng.real01_open_low();
                const double x =
                    params.weibull_c * std::pow(-std::log(u), 1.0 / params.weibull_a);
                kd = std::max(static_cast<double>(params.min_degree), std::floor(x));
            }
            if (kd <= static_cast<double>(max_k)) return static_cast<VertexId>(kd);
        }
    };

    DegreeSequence seq;
    seq.degrees.resize(static_cast<std::size_t>(n));
    for (auto& d : seq.degrees) d = draw();
    // Parity fix: resample the first entry until the total is even.
    while (seq.even_sum() % 2 != 0) seq.degrees[0] = draw();
    return seq;
}

ConfigModelResult gen_configuration(const DegreeSequence& seq, std::uint64_t seed) {
    const auto n = static_cast<VertexId>(seq.degrees.size());
    std::uint64_t total = 0;
    for (VertexId d : seq.degrees) {
        if (d < 0) throw std::invalid_argument("negative degree");
        if (d >= n) throw std::invalid_argument("degree must be < n");
        total += static_cast<std::uint64_t>(d);
    }
    if (total % 2 != 0) throw std::invalid_argument("degree sum must be even");

    Rng rng(seed);
    std::vector<VertexId> stubs;
    stubs.reserve(total);
    for (VertexId v = 0; v < n; ++v)
        stubs.insert(stubs.end(), static_cast<std::size_t>(seq.degrees[v]), v);
    rng.shuffle(stubs);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(total);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(total / 2);
    std::vector<VertexId> leftover;
    auto try_pair = [&](VertexId a, VertexId b) {
        if (a == b || !seen.insert(pack(a, b)).second) return false;
        edges.emplace_back(a, b);
        return true;
    };
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
        if (!try_pair(stubs[i], stubs[i + 1])) {
            leftover.push_back(stubs[i]);
            leftover.push_back(stubs[i + 1]);
        }

    // Reshuffle-and-repair the colliding stubs under a bounded budget.
    std::size_t attempts = 100 * leftover.size();
    while (leftover.size() >= 2 && attempts > 0) {
        rng.shuffle(leftover);
        std::vector<VertexId> next;
        for (std::size_t i = 0; i + 1 < leftover.size(); i += 2) {
            if (attempts > 0) {
                --attempts;
                if (try_pair(leftover[i], leftover[i + 1])) continue;
            }
            next.push_back(leftover[i]);
            next.push_back(leftover[i + 1]);
        }
        leftover = std::move(next);
    }

    // Stub pairs that cannot wire directly (typically hub collisions) can
    // usually consume an existing edge (c,d) via the split (a,c) + (b,d),
    // which leaves every realized degree intact.
    if (leftover.size() >= 2 && !edges.empty()) {
        std::vector<VertexId> still;
        for (std::size_t i = 0; i + 1 < leftover.size(); i += 2) {
            const VertexId a = leftover[i];
            const VertexId b = leftover[i + 1];
            bool repaired = false;
            for (int attempt = 0; attempt < 200 && !repaired; ++attempt) {
                const std::size_t ei = rng.below(edges.size());
                const auto [c, d] = edges[ei];
                for (int orient = 0; orient < 2 && !repaired; ++orient) {
                    const VertexId x = orient == 0 ? c : d;
                    const VertexId y = orient == 0 ? d : c;
                    if (a == x || b == y) continue;
                    if (pack(a, x) == pack(b, y)) continue;
                    if (seen.count(pack(a, x)) || seen.count(pack(b, y))) continue;
                    seen.erase(pack(c, d));
                    seen.insert(pack(a, x));
                    seen.insert(pack(b, y));
                    edges[ei] = {a, x};
                    edges.emplace_back(b, y);
                    repaired = true;
                }
            }
            if (!repaired) {
                still.push_back(a);
                still.push_back(b);
            }
        }
        leftover = std::move(still);
    }

    ConfigModelResult result;
    result.dropped_stubs = leftover.size();
    result.graph = Graph::from_edges(n, std::move(edges));
    return result;
}

ConfigModelResult generate(const GeneratorConfig& config) {
    ConfigModelResult result;
    switch (config.kind) {
        case GeneratorKind::Er:
            result.graph = gen_er(config.n, config.edges, config.seed);
            break;
        case GeneratorKind::Ba:
            result.graph = gen_ba(config.n, config.m, config.seed);
            break;
        case GeneratorKind::Brite:
            result.graph = gen_brite(config.n, config.m, config.p_extra, config.seed);
            break;
        case GeneratorKind::ConfigPareto:
        case GeneratorKind::ConfigWeibull: {
            const auto seq =
                sample_degree_sequence(config.kind, config.law, config.n, config.seed);
            // Independent stream for the wiring stage.
            result = gen_configuration(seq, config.seed ^ 0x9e3779b97f4a7c15ull);
            break;
        }
    }
    return result;
}

}  // namespace corescope
