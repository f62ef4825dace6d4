#include <algorithm>
#include <cstdlib>
#include <queue>
#include <vector>

#include "doctest.h"
#include "gnd/graph.hpp"
#include "gnd/partition.hpp"
#include "gnd/rng.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using gnd::Graph;
using gnd::NodeId;
using gnd::NodeWeights;
using gnd::Side;

namespace {

double cover_weight(const std::vector<NodeId>& cover, const std::vector<double>& w) {
    double total = 0.0;
    for (auto v : cover) total += w[v];
    return total;
}

// true iff some node of `from` reaches some node of `to` in g once `removed`
// is taken out; plain BFS, no shared code with the library
bool sides_connected(const Graph& g, const std::vector<Side>& side,
                     const std::vector<NodeId>& removed) {
    std::vector<char> dead(g.node_count(), 0);
    for (auto v : removed) dead[v] = 1;
    std::vector<char> seen(g.node_count(), 0);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (dead[s] || seen[s] || side[s] != Side::M) continue;
        std::queue<NodeId> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            const NodeId u = q.front();
            q.pop();
            if (side[u] == Side::MBar) return true;
            for (auto nb : g.neighbors(u)) {
                if (!dead[nb] && !seen[nb]) {
                    seen[nb] = 1;
                    q.push(nb);
                }
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("sign_split by sign") {
    const auto s = gnd::sign_split(std::vector<double>{0.7, 0.01, -0.7});
    CHECK(s == std::vector<Side>{Side::M, Side::M, Side::MBar});
    const auto t = gnd::sign_split(std::vector<double>{1.0, -1.0});
    CHECK(t == std::vector<Side>{Side::M, Side::MBar});
    // zero counts as M
    const auto u = gnd::sign_split(std::vector<double>{0.0, -0.5});
    CHECK(u == std::vector<Side>{Side::M, Side::MBar});
}

TEST_CASE("sign_split median fallback keeps both sides nonempty") {
    // all nonnegative: the top floor(n/2) values go to M
    const auto s = gnd::sign_split(std::vector<double>{0.1, 0.2, 0.3});
    CHECK(s == std::vector<Side>{Side::MBar, Side::MBar, Side::M});
    // all negative
    const auto t = gnd::sign_split(std::vector<double>{-1.0, -2.0});
    CHECK(t == std::vector<Side>{Side::M, Side::MBar});
    // exact ties break by index, higher indices fill M
    const auto u = gnd::sign_split(std::vector<double>{0.5, 0.5, 0.5, 0.5});
    CHECK(u == std::vector<Side>{Side::MBar, Side::MBar, Side::M, Side::M});
}

TEST_CASE("sign_split needs at least two entries") {
    CHECK_THROWS(gnd::sign_split(std::vector<double>{1.0}));
    CHECK_THROWS(gnd::sign_split(std::vector<double>{}));
}

TEST_CASE("separating_edges") {
    SUBCASE("one cut edge on the path") {
        const auto g = testsupport::path_graph(3);
        const std::vector<Side> side{Side::M, Side::M, Side::MBar};
        const auto cut = gnd::separating_edges(g, side);
        CHECK(cut.edges == std::vector<std::pair<NodeId, NodeId>>{{1, 2}});
        CHECK(cut.boundary == std::vector<NodeId>{1, 2});
    }
    SUBCASE("uniform side means empty cut") {
        const auto g = testsupport::cycle_graph(4);
        const auto cut = gnd::separating_edges(g, std::vector<Side>(4, Side::M));
        CHECK(cut.edges.empty());
        CHECK(cut.boundary.empty());
    }
    SUBCASE("alternating cycle cuts everything, lexicographically") {
        const auto g = testsupport::cycle_graph(4);
        const std::vector<Side> side{Side::M, Side::MBar, Side::M, Side::MBar};
        const auto cut = gnd::separating_edges(g, side);
        CHECK(cut.edges ==
              std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
        CHECK(cut.boundary == std::vector<NodeId>{0, 1, 2, 3});
    }
}

TEST_CASE("weighted_vertex_cover picks the light endpoint of a single edge") {
    const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}};
    const auto cover = gnd::weighted_vertex_cover(edges, std::vector<double>{3.0, 1.0});
    CHECK(cover == std::vector<NodeId>{1});
}

TEST_CASE("weighted_vertex_cover takes the cheap middle of a path") {
    const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 2}};
    const auto cover = gnd::weighted_vertex_cover(edges, std::vector<double>{5.0, 1.0, 5.0});
    CHECK(cover == std::vector<NodeId>{1});
}

TEST_CASE("weighted_vertex_cover on the unit triangle") {
    const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {0, 2}, {1, 2}};
    const std::vector<double> w{1.0, 1.0, 1.0};
    const auto cover = gnd::weighted_vertex_cover(edges, w);
    CHECK(cover == std::vector<NodeId>{0, 1});
    CHECK(cover_weight(cover, w) == testsupport::min_cover_cost(edges, w));  // 2 is optimal
}

TEST_CASE("weighted_vertex_cover prunes down to the lowest id on ties") {
    const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}};
    const auto cover = gnd::weighted_vertex_cover(edges, std::vector<double>{1.0, 1.0});
    CHECK(cover == std::vector<NodeId>{0});
}

TEST_CASE("weighted_vertex_cover edge cases") {
    CHECK(gnd::weighted_vertex_cover({}, std::vector<double>{1.0}).empty());
    const std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}};
    CHECK_THROWS(gnd::weighted_vertex_cover(edges, std::vector<double>{-1.0, 1.0}));
    // zero-weight nodes are free cover members
    const auto cover = gnd::weighted_vertex_cover(edges, std::vector<double>{0.0, 5.0});
    CHECK(cover == std::vector<NodeId>{0});
}

TEST_CASE("weighted_vertex_cover stays within twice the optimum") {
    gnd::Rng rng(424242);
    int instances = 0;
    while (instances < 200) {
        const std::size_t n = 4 + rng.next_below(13);  // at most 16 boundary nodes
        const auto g = testsupport::gnp(n, 0.35, rng);
        std::vector<Side> side(n);
        for (auto& s : side) s = rng.next_double() < 0.5 ? Side::M : Side::MBar;
        const auto cut = gnd::separating_edges(g, side);
        if (cut.edges.empty()) continue;
        std::vector<double> w(n);
        for (auto& wi : w) wi = instances % 4 == 0 ? 1.0 : 0.1 + rng.next_double() * 9.9;

        const auto cover = gnd::weighted_vertex_cover(cut.edges, w);
        CHECK(testsupport::covers_all(cut.edges, cover));
        const double opt = testsupport::min_cover_cost(cut.edges, w);
        CHECK(cover_weight(cover, w) <= 2.0 * opt + 1e-9);
        ++instances;
    }
}

TEST_CASE("bisect splits the two triangles at the bridge") {
    const auto g = testsupport::two_triangles_bridge();
    NodeWeights w(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) w[v] = static_cast<double>(g.degree(v));
    gnd::SpectralConfig cfg;
    cfg.min_iterations = 500;
    const auto res = gnd::bisect(g, w, true, cfg);

    CHECK(res.separating_edges == std::vector<std::pair<NodeId, NodeId>>{{2, 3}});
    CHECK(res.boundary_nodes == std::vector<NodeId>{2, 3});
    // both bridge endpoints have degree 3; the tie goes to the lower id
    CHECK(res.removal_cover == std::vector<NodeId>{2});
    CHECK(res.cover_cost == 3.0);
    // the triangles end up on opposite sides
    CHECK(res.side[0] == res.side[1]);
    CHECK(res.side[0] == res.side[2]);
    CHECK(res.side[3] == res.side[4]);
    CHECK(res.side[3] == res.side[5]);
    CHECK(res.side[0] != res.side[3]);

    // the dense eigensolver agrees on the split, up to a global flip
    const auto eigs = testsupport::lw_eigs(g, w);
    const auto oracle_side = gnd::sign_split(eigs.fiedler);
    const bool flipped = oracle_side[0] != res.side[0];
    for (NodeId v = 0; v < 6; ++v)
        CHECK((flipped ? (oracle_side[v] != res.side[v]) : (oracle_side[v] == res.side[v])));
}

TEST_CASE("bisect on one edge removes one endpoint") {
    const auto g = testsupport::path_graph(2);
    const auto res = gnd::bisect(g, NodeWeights{1.0, 1.0}, true, gnd::SpectralConfig{});
    CHECK(res.separating_edges == std::vector<std::pair<NodeId, NodeId>>{{0, 1}});
    CHECK(res.removal_cover == std::vector<NodeId>{0});
    CHECK(res.cover_cost == 1.0);
}

TEST_CASE("bisect cuts the middle of the four-path") {
    const auto g = testsupport::path_graph(4);
    NodeWeights w{1.0, 2.0, 2.0, 1.0};
    gnd::SpectralConfig cfg;
    cfg.min_iterations = 2000;
    const auto res = gnd::bisect(g, w, true, cfg);
    CHECK(res.separating_edges == std::vector<std::pair<NodeId, NodeId>>{{1, 2}});
    CHECK(res.boundary_nodes == std::vector<NodeId>{1, 2});
    CHECK(res.removal_cover == std::vector<NodeId>{1});
    CHECK(res.cover_cost == 2.0);
}

TEST_CASE("naive strategy removes a whole boundary side") {
    const auto g = testsupport::two_triangles_bridge();
    NodeWeights w(6, 1.0);
    gnd::SpectralConfig cfg;
    cfg.min_iterations = 500;
    const auto res = gnd::bisect(g, w, false, cfg, gnd::CoverStrategy::Naive);
    REQUIRE(res.removal_cover.size() == 1);
    const NodeId kept = res.removal_cover[0];
    CHECK((kept == 2 || kept == 3));
    CHECK(res.side[kept] == Side::M);
    CHECK(res.cover_cost == 1.0);
}

TEST_CASE("bisect needs at least two nodes") {
    const auto g = Graph::from_edges(1, {});
    CHECK_THROWS(gnd::bisect(g, NodeWeights{1.0}, false, gnd::SpectralConfig{}));
}

TEST_CASE("bisect cover disconnects the sides") {
    gnd::Rng rng(90210);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = testsupport::random_connected(8 + rng.next_below(60), 0.25, rng);
        NodeWeights w(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) w[v] = static_cast<double>(g.degree(v));
        gnd::SpectralConfig cfg;
        cfg.rng_seed = 3000 + trial;
        const auto res = gnd::bisect(g, w, true, cfg);

        // cover nodes all live on the boundary
        for (auto v : res.removal_cover)
            CHECK(std::binary_search(res.boundary_nodes.begin(), res.boundary_nodes.end(), v));
        // every cut edge is covered
        CHECK(testsupport::covers_all(res.separating_edges, res.removal_cover));
        // and removing the cover leaves no path between the two sides
        CHECK(!sides_connected(g, res.side, res.removal_cover));
        // both sides nonempty
        CHECK(std::count(res.side.begin(), res.side.end(), Side::M) > 0);
        CHECK(std::count(res.side.begin(), res.side.end(), Side::MBar) > 0);
    }
}

TEST_CASE("bisect is deterministic") {
    gnd::Rng rng(1111);
    const auto g = testsupport::random_connected(40, 0.2, rng);
    NodeWeights w(g.node_count(), 1.0);
    gnd::SpectralConfig cfg;
    cfg.rng_seed = 17;
    const auto a = gnd::bisect(g, w, false, cfg);
    const auto b = gnd::bisect(g, w, false, cfg);
    CHECK(a.side == b.side);
    CHECK(a.separating_edges == b.separating_edges);
    CHECK(a.removal_cover == b.removal_cover);
    CHECK(a.cover_cost == b.cover_cost);
}
