#include <doctest.h>

#include <algorithm>
#include <map>

#include "corescope/generators.hpp"
#include "corescope/kcore.hpp"
#include "corescope/rng.hpp"
#include "test_util.hpp"

using namespace corescope;
using namespace corescope::test;

namespace {

Graph triangle_with_pendant() {
    return make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
}

Graph k4_with_pendant() {
    auto edges = complete_graph(4).edges();
    edges.emplace_back(0, 4);
    return make_graph(5, std::move(edges));
}

/// A small three-shell topology: K4 center, a triangle hanging off it,
/// and a pendant vertex.
Graph three_shell_example() {
    std::vector<std::pair<VertexId, VertexId>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},  // K4
        {4, 5}, {5, 6}, {6, 4},                          // triangle
        {4, 0},                                          // bridge
        {7, 1},                                          // pendant
    };
    return make_graph(8, std::move(edges));
}

}  // namespace

TEST_CASE("complete graph K_n has uniform shell index n-1") {
    const auto d = decompose(complete_graph(4));
    CHECK(d.k_max == 3);
    for (VertexId v = 0; v < 4; ++v) CHECK(d.shell_index[v] == 3);
    CHECK(d.shells[3].size() == 4);
}

TEST_CASE("a star belongs entirely to the first shell") {
    const auto d = decompose(star_graph(10));
    CHECK(d.k_max == 1);
    for (VertexId v = 0; v < 11; ++v) CHECK(d.shell_index[v] == 1);
}

TEST_CASE("trees decompose trivially with k_max 1") {
    for (std::uint64_t seed : {1, 2, 3, 4}) {
        const auto d = decompose(random_tree(200, seed));
        CHECK(d.k_max == 1);
    }
}

TEST_CASE("brute-force oracle on hand-traced graphs") {
    const auto d = brute_force_decompose(triangle_with_pendant());
    CHECK(d.shell_index[3] == 1);
    CHECK(d.shell_index[0] == 2);
    CHECK(d.shell_index[1] == 2);
    CHECK(d.k_max == 2);

    // two triangles joined by one edge: the bridge endpoints lose their
    // third neighbor during the k=3 round, so everything lands in shell 2
    const Graph two_tri =
        make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    const auto d2 = brute_force_decompose(two_tri);
    for (VertexId v = 0; v < 6; ++v) CHECK(d2.shell_index[v] == 2);
}

TEST_CASE("three-shell sketch yields three distinct shell indices") {
    const auto d = decompose(three_shell_example());
    CHECK(d.k_max == 3);
    CHECK(d.shell_index[7] == 1);
    CHECK(d.shell_index[4] == 2);
    CHECK(d.shell_index[5] == 2);
    CHECK(d.shell_index[0] == 3);
    CHECK(decompose(three_shell_example()).shells[2].size() == 3);
}

TEST_CASE("decompose equals brute force on adversarial shapes") {
    // lollipop: K8 with a 30-vertex tail
    auto lolli = complete_graph(8).edges();
    for (VertexId v = 8; v < 38; ++v) lolli.emplace_back(v - 1, v);
    // star of stars: hub 0, spokes each carrying leaves
    std::vector<std::pair<VertexId, VertexId>> sos;
    for (VertexId s = 1; s <= 6; ++s) {
        sos.emplace_back(0, s);
        for (VertexId l = 0; l < 5; ++l)
            sos.emplace_back(s, 7 + (s - 1) * 5 + l);
    }
    // barbell: two K6 joined by a path
    auto barbell = complete_graph(6).edges();
    for (VertexId i = 0; i < 6; ++i)
        for (VertexId j = i + 1; j < 6; ++j) barbell.emplace_back(10 + i, 10 + j);
    barbell.emplace_back(0, 6);
    barbell.emplace_back(6, 7);
    barbell.emplace_back(7, 10);
    for (Graph g : {make_graph(38, lolli), make_graph(37, sos), make_graph(16, barbell)}) {
        CHECK(decompose(g).shell_index == brute_force_decompose(g).shell_index);
    }
    const auto d = decompose(make_graph(38, lolli));
    CHECK(d.k_max == 7);  // the clique survives everything
}

TEST_CASE("decompose equals the brute-force oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = gen_er(60, 177, seed);  // ~ER(60, p=0.1)
        const auto fast = decompose(g);
        const auto slow = brute_force_decompose(g);
        REQUIRE(fast.shell_index == slow.shell_index);
        CHECK(fast.k_max == slow.k_max);
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Graph g = gen_ba(120, 3, seed);
        CHECK(decompose(g).shell_index == brute_force_decompose(g).shell_index);
    }
    // a few thousand-vertex instances, the upper end of the oracle's range
    const Graph big_er = gen_er(1000, 3500, 77);
    CHECK(decompose(big_er).shell_index == brute_force_decompose(big_er).shell_index);
    const Graph big_ba = gen_ba(1000, 2, 78);
    CHECK(decompose(big_ba).shell_index == brute_force_decompose(big_ba).shell_index);
    DegreeLawParams law;
    law.max_degree = 999;
    const auto seq = sample_degree_sequence(GeneratorKind::ConfigPareto, law, 1000, 79);
    const Graph big_cfg = gen_configuration(seq, 80).graph;
    CHECK(decompose(big_cfg).shell_index == brute_force_decompose(big_cfg).shell_index);
}

TEST_CASE("decomposition is independent of edge input order") {
    const Graph base = gen_er(80, 240, 5);
    auto edges = base.edges();
    Rng rng(17);
    rng.shuffle(edges);
    for (auto& [u, v] : edges)
        if (rng.below(2)) std::swap(u, v);
    const Graph permuted = Graph::from_edges(80, std::move(edges));
    CHECK(decompose(base).shell_index == decompose(permuted).shell_index);
}

TEST_CASE("empty and edgeless graphs") {
    const auto d0 = decompose(Graph{});
    CHECK(d0.k_max == 0);
    CHECK(d0.shells.size() == 1);
    const auto d1 = decompose(Graph::from_edges(5, {}));
    CHECK(d1.k_max == 0);
    CHECK(d1.shells[0].size() == 5);
}

TEST_CASE("core_subgraph basics") {
    const Graph g = k4_with_pendant();
    const auto d = decompose(g);
    const Graph whole = core_subgraph(g, d, 0);
    CHECK(whole.vertex_count() == 5);
    CHECK(whole.edge_count() == 7);
    const Graph core2 = core_subgraph(g, d, 2);
    CHECK(core2.vertex_count() == 4);
    CHECK(core2.edge_count() == 6);
    CHECK(core_subgraph(g, d, d.k_max + 1).vertex_count() == 0);
}

TEST_CASE("cores nest monotonically and satisfy the degree condition") {
    for (std::uint64_t seed : {11, 12}) {
        const Graph g = gen_er(150, 600, seed);
        const auto d = decompose(g);
        std::size_t prev = static_cast<std::size_t>(g.vertex_count()) + 1;
        for (VertexId k = 0; k <= d.k_max; ++k) {
            const Graph core = core_subgraph(g, d, k);
            CHECK(static_cast<std::size_t>(core.vertex_count()) <= prev);
            prev = core.vertex_count();
            for (VertexId v = 0; v < core.vertex_count(); ++v)
                CHECK(core.degree(v) >= k);
        }
    }
}

TEST_CASE("no vertex outside the k-core can be re-inserted") {
    for (std::uint64_t seed : {21, 22}) {
        const Graph g = gen_er(60, 210, seed);
        const auto d = decompose(g);
        for (VertexId k = 1; k <= d.k_max; ++k) {
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (d.shell_index[v] >= k) continue;
                VertexId inside = 0;
                for (VertexId u : g.neighbors(v))
                    if (d.shell_index[u] >= k) ++inside;
                CHECK(inside < k);
            }
        }
    }
}

TEST_CASE("k_max bounds") {
    for (std::uint64_t seed : {31, 32, 33}) {
        const Graph g = gen_er(100, 450, seed);
        const auto d = decompose(g);
        CHECK(d.k_max <= g.max_degree());
        VertexId best = 0;
        for (VertexId k = 1; k <= g.max_degree(); ++k) {
            VertexId count = 0;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) >= k) ++count;
            if (count >= k + 1) best = k;
        }
        CHECK(d.k_max <= best);
    }
}

TEST_CASE("shell_sizes reports zero-size shells") {
    const auto star = decompose(star_graph(10));
    const auto sizes = shell_sizes(star);
    CHECK(sizes.size() == 2);
    CHECK(sizes[1] == 11);

    // K5 with one pendant leaves shells 2 and 3 empty
    auto edges = complete_graph(5).edges();
    edges.emplace_back(0, 5);
    const auto d = decompose(make_graph(6, std::move(edges)));
    const auto s = shell_sizes(d);
    CHECK(s[1] == 1);
    CHECK(s[2] == 0);
    CHECK(s[3] == 0);
    CHECK(s[4] == 5);
}

TEST_CASE("shell clusters partition shells and count upward edges") {
    // K4 plus two pendants on different clique vertices
    auto edges = complete_graph(4).edges();
    edges.emplace_back(0, 4);
    edges.emplace_back(1, 5);
    const Graph g = make_graph(6, std::move(edges));
    const auto d = decompose(g);
    const auto clusters = shell_clusters(g, d);
    REQUIRE(clusters.size() == 3);
    CHECK(clusters[0].index == 1);
    CHECK(clusters[0].members.size() == 1);
    CHECK(clusters[0].upward_edge_count == 1);
    CHECK(clusters[1].index == 1);
    CHECK(clusters[1].upward_edge_count == 1);
    CHECK(clusters[2].index == 3);
    CHECK(clusters[2].members.size() == 4);

    const auto tri = shell_clusters(complete_graph(3), decompose(complete_graph(3)));
    REQUIRE(tri.size() == 1);
    CHECK(tri[0].index == 2);
    CHECK(tri[0].upward_edge_count == 0);
}

TEST_CASE("shell clusters match an independent component labeling") {
    const auto cfg = sample_degree_sequence(GeneratorKind::ConfigPareto, {}, 3000, 42);
    const Graph g = gen_configuration(cfg, 43).graph;
    const auto d = decompose(g);
    const auto clusters = shell_clusters(g, d);

    // independent pass: BFS inside each shell
    std::map<VertexId, std::size_t> per_shell;
    for (const auto& q : clusters) ++per_shell[q.index];
    std::map<VertexId, std::size_t> expected;
    std::vector<bool> visited(g.vertex_count(), false);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (visited[s]) continue;
        ++expected[d.shell_index[s]];
        std::vector<VertexId> stack{s};
        visited[s] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : g.neighbors(v))
                if (!visited[u] && d.shell_index[u] == d.shell_index[v]) {
                    visited[u] = true;
                    stack.push_back(u);
                }
        }
    }
    CHECK(per_shell == expected);

    std::size_t total = 0;
    for (const auto& q : clusters) total += q.members.size();
    CHECK(total == static_cast<std::size_t>(g.vertex_count()));
}

TEST_CASE("homogeneous graphs show increasing shells, not a power law") {
    const Graph g = gen_er(10000, 100000, 3);  // <d> = 20
    const auto sizes = shell_sizes(decompose(g));
    const double slope = fit_shell_powerlaw(sizes, 1, static_cast<VertexId>(sizes.size()));
    CHECK(slope > 0.0);  // shell size grows with the index
}

TEST_CASE("power-law fit recovers a synthetic exponent") {
    const std::map<VertexId, std::size_t> sizes{{1, 1000}, {2, 125}, {4, 16}};
    CHECK(fit_shell_powerlaw(sizes, 1, 4) == doctest::Approx(-2.98289).epsilon(1e-4));
    CHECK_THROWS_WITH_AS(fit_shell_powerlaw({{1, 10}, {2, 5}}, 1, 2),
                         "insufficient shells for fit", std::invalid_argument);
}
