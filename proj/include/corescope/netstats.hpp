#ifndef CORESCOPE_NETSTATS_HPP
#define CORESCOPE_NETSTATS_HPP

#include <map>
#include <span>
#include <vector>

#include "corescope/graph.hpp"
#include "corescope/kcore.hpp"

namespace corescope {

/// A degree-indexed statistic: value per observed degree, support counts,
/// and the graph-wide mean used when rescaling for collapse plots.
struct Spectrum {
    std::map<VertexId, double> points;
    std::map<VertexId, std::size_t> support_counts;
    double mean_value = 0.0;
};

/// Raw betweenness per vertex: sums over unordered pairs {s,t}, endpoints
/// excluded, disconnected pairs contributing zero.
using CentralityTable = std::vector<double>;

/// Degrees of one k-core divided by that core's mean degree, kept as a
/// sorted sample so collapse distances can be computed directly.
struct RescaledDegreeSample {
    VertexId core_index = 0;
    double mean_degree = 0.0;
    std::vector<double> values;  // sorted, size = core order
};

/// Per-shell betweenness profile and per-degree shell profile (Fig.-5-style
/// summary; mean and standard deviation).
struct CentralityProfile {
    struct Row {
        VertexId key = 0;  // shell index or degree
        std::size_t count = 0;
        double mean = 0.0;
        double stddev = 0.0;
    };
    std::vector<Row> bc_by_shell;
    std::vector<Row> shell_by_degree;
};

/// CCDF over observed degrees plus d = 0: P_>(d) = fraction of vertices of
/// degree strictly greater than d. Monotone non-increasing.
std::vector<std::pair<VertexId, double>> cumulative_degree_distribution(const Graph& g);

/// Rescaled degree samples for each requested core index (0 = whole graph).
/// Empty cores are skipped.
std::vector<RescaledDegreeSample> rescaled_core_distributions(
    const Graph& g, const ShellDecomposition& d, std::span<const VertexId> core_indices);

/// Average nearest-neighbor degree spectrum d_nn(d). Degree-0 vertices are
/// excluded; mean_value averages the per-vertex neighbor-degree means.
Spectrum avg_nearest_neighbor_degree(const Graph& g);

/// Clustering spectrum cc(d) with vertices of degree < 2 excluded;
/// mean_value is the average local clustering over included vertices.
Spectrum clustering_spectrum(const Graph& g);

/// Exact shortest-path betweenness by per-source BFS and dependency
/// accumulation. `threads` caps the number of concurrent source sweeps.
CentralityTable betweenness(const Graph& g, unsigned threads = 1);

/// Mean/stddev of betweenness per shell index, and of shell index per
/// degree. Betweenness is computed on the original graph.
CentralityProfile shell_centrality_profile(const Graph& g, const ShellDecomposition& d,
                                           const CentralityTable& bc);

/// Two-sample Kolmogorov-Smirnov statistic between rescaled samples.
/// Throws std::invalid_argument on an empty sample.
double collapse_distance(std::span<const double> sample_a, std::span<const double> sample_b);

/// L-infinity distance between two rescaled spectra after aggregating onto
/// shared logarithmic degree bins. x = degree / mean_degree, y = value /
/// spectrum mean; bins double per step and only bins supported by at least
/// `min_support` vertices on both sides are compared. Returns 0 when no bin
/// qualifies on both sides.
double spectrum_collapse_distance(const Spectrum& a, double mean_degree_a,
                                  const Spectrum& b, double mean_degree_b,
                                  std::size_t min_support = 10);

}  // namespace corescope

#endif
