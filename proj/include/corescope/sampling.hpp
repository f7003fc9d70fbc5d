#ifndef CORESCOPE_SAMPLING_HPP
#define CORESCOPE_SAMPLING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "corescope/graph.hpp"
#include "corescope/kcore.hpp"
#include "corescope/temporal.hpp"

namespace corescope {

enum class PathStrategy {
    Usp,  // one deterministic shortest-path tree per source
    Rsp,  // an independent uniformly random shortest path per pair
};

struct SamplingConfig {
    VertexId n_sources = 1;
    VertexId n_targets = 1;
    PathStrategy strategy = PathStrategy::Usp;
    std::uint64_t seed = 0;

    double effort(VertexId n) const {
        return n == 0 ? 0.0
                      : static_cast<double>(n_sources) * static_cast<double>(n_targets) /
                            static_cast<double>(n);
    }
};

struct SampleResult {
    Graph graph;  // labels carried over from the probed graph
    std::size_t skipped_pairs = 0;
    double effort = 0.0;
};

/// Merges one shortest path per (source, target) pair into a sampled map.
/// Sources and targets are drawn uniformly, disjointly, without
/// replacement. Unreachable pairs are skipped and counted.
SampleResult traceroute_sample(const Graph& g, const SamplingConfig& cfg);

/// One probing-effort cell of a bias experiment.
struct BiasCase {
    double effort = 0.0;
    std::uint64_t seed = 0;
    VertexId n_targets = 0;
    std::size_t skipped_pairs = 0;
    GraphSummary sampled_summary;
    VertexId k_max_original = 0;
    VertexId k_max_sampled = 0;
    std::vector<std::size_t> shell_sizes_sampled;
    MapComparison comparison;  // original vs sampled, matched by label
    double shell_index_correlation = 0.0;  // Pearson, over discovered vertices
};

/// Runs traceroute_sample for every (effort, seed) combination and
/// decomposes the results against the original map.
std::vector<BiasCase> bias_experiment(const Graph& g, VertexId n_sources,
                                      std::span<const double> efforts,
                                      PathStrategy strategy,
                                      std::span<const std::uint64_t> seeds);

}  // namespace corescope

#endif
