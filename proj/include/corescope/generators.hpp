#ifndef CORESCOPE_GENERATORS_HPP
#define CORESCOPE_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "corescope/graph.hpp"

namespace corescope {

enum class GeneratorKind { Er, Ba, ConfigPareto, ConfigWeibull, Brite };

/// Degree-law parameters for the configuration-model generators.
/// max_degree is a hard tail truncation (draws above it are redone); the
/// default of 1000 matches the truncated tails of the reference AS-like
/// topologies. Raise it toward n-1 for an uncut law. It is always clamped
/// to n-1.
struct DegreeLawParams {
    double gamma = 2.3;       // Pareto exponent, > 2
    double weibull_a = 0.4;   // shape
    double weibull_c = 0.6;   // scale
    VertexId min_degree = 2;
    VertexId max_degree = 1000;
};

struct GeneratorConfig {
    GeneratorKind kind = GeneratorKind::Er;
    VertexId n = 0;
    std::size_t edges = 0;        // ER
    VertexId m = 1;               // BA / BRITE links per arrival
    double p_extra = 0.55;        // BRITE extra-edge probability per arrival
    DegreeLawParams law;
    std::uint64_t seed = 0;
};

struct DegreeSequence {
    std::vector<VertexId> degrees;
    std::uint64_t even_sum() const;
};

/// Outcome of a stub-matching construction. Stubs that could not be wired
/// without self- or multi-connections are dropped; realized degrees then
/// fall short of the targets by dropped_stubs endpoints in total.
struct ConfigModelResult {
    Graph graph;
    std::size_t dropped_stubs = 0;
};

/// Uniform simple graph with exactly `e` distinct edges.
Graph gen_er(VertexId n, std::size_t e, std::uint64_t seed);

/// Linear preferential attachment: a seed clique, then arrivals each wiring
/// m distinct targets drawn from the stub list (duplicates redrawn). The
/// seed clique has m+2 vertices (m+1 when n == m+1), which reproduces the
/// usual small-clique initial condition with a (m+1)-core at the center.
Graph gen_ba(VertexId n, VertexId m, std::uint64_t seed);

/// n integer degrees from the requested law (kind must be ConfigPareto or
/// ConfigWeibull). Pareto draws are continuous inverse-CDF values starting
/// at min_degree - 1/2 rounded to the nearest integer, so P(k) tracks
/// k^-gamma from min_degree up; Weibull draws are floored, with smaller
/// values clamped to min_degree. Draws above max_degree are redone. The
/// sum is forced even by resampling one entry.
DegreeSequence sample_degree_sequence(GeneratorKind kind, const DegreeLawParams& params,
                                      VertexId n, std::uint64_t seed);

/// Molloy-Reed stub matching with rejection of self- and multi-connections.
/// Stubs still unmatched after the rewiring budget (100x the leftover count)
/// are dropped and reported.
ConfigModelResult gen_configuration(const DegreeSequence& seq, std::uint64_t seed);

/// BA growth plus, after each arrival, one extra edge with probability
/// p_extra whose two endpoints are both drawn by preferential attachment
/// (self/duplicate draws retried). p_extra = 0 degenerates to gen_ba.
Graph gen_brite(VertexId n, VertexId m, double p_extra, std::uint64_t seed);

/// Dispatch on config.kind; configuration-model kinds sample their degree
/// sequence internally from config.seed.
ConfigModelResult generate(const GeneratorConfig& config);

}  // namespace corescope

#endif
