#include "gnd/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gnd {

std::vector<Side> sign_split(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n < 2) throw std::invalid_argument("sign_split: need at least 2 entries");

    std::vector<Side> side(n);
    std::size_t m_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] >= 0.0) {
            side[i] = Side::M;
            ++m_count;
        } else {
            side[i] = Side::MBar;
        }
    }
    if (m_count > 0 && m_count < n) return side;

    // Degenerate: one-sided. Put the floor(n/2) largest entries in M, the
    // rest in MBar, ordering by (value, index) so ties are deterministic.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (v[a] != v[b]) return v[a] < v[b];
        return a < b;
    });
    const std::size_t m_size = n / 2;
    for (std::size_t r = 0; r < n; ++r) {
        side[order[r]] = (r >= n - m_size) ? Side::M : Side::MBar;
    }
    return side;
}

EdgeCut separating_edges(const Graph& g, std::span<const Side> side) {
    if (side.size() != g.node_count())
        throw std::invalid_argument("separating_edges: side vector size mismatch");

    EdgeCut cut;
    std::vector<char> on_boundary(g.node_count(), 0);
    // CSR neighbor lists are sorted, so visiting u ascending and keeping
    // u < v yields lexicographic edge order directly.
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            if (side[u] != side[v]) {
                cut.edges.emplace_back(u, v);
                on_boundary[u] = 1;
                on_boundary[v] = 1;
            }
        }
    }
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (on_boundary[u]) cut.boundary.push_back(u);
    return cut;
}

std::vector<NodeId> weighted_vertex_cover(std::span<const std::pair<NodeId, NodeId>> edges,
                                          std::span<const double> weights,
                                          std::span<const std::size_t> keep_priority) {
    for (double w : weights)
        if (w < 0.0) throw std::invalid_argument("weighted_vertex_cover: negative weight");
    if (!keep_priority.empty() && keep_priority.size() != weights.size())
        throw std::invalid_argument("weighted_vertex_cover: keep_priority size mismatch");

    std::vector<double> residual(weights.begin(), weights.end());
    std::vector<char> in_cover(weights.size(), 0);

    auto covered = [&](const std::pair<NodeId, NodeId>& e) {
        return in_cover[e.first] || in_cover[e.second];
    };

    for (const auto& e : edges) {
        if (e.first >= weights.size() || e.second >= weights.size())
            throw std::out_of_range("weighted_vertex_cover: edge endpoint out of range");
        if (covered(e)) continue;
        const double m = std::min(residual[e.first], residual[e.second]);
        residual[e.first] -= m;
        residual[e.second] -= m;
        if (residual[e.first] <= 0.0) in_cover[e.first] = 1;
        if (residual[e.second] <= 0.0) in_cover[e.second] = 1;
    }

    // Prune: drop cover nodes whose edges are all covered by the rest.
    // Visiting heavy nodes first keeps the cheap nodes in the cover; among
    // equal weights, low keep_priority goes first so high-priority nodes
    // survive, with id descending as the final tie break.
    std::vector<NodeId> members;
    for (NodeId u = 0; u < in_cover.size(); ++u)
        if (in_cover[u]) members.push_back(u);

    std::vector<std::vector<std::size_t>> incident(weights.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].first].push_back(i);
        incident[edges[i].second].push_back(i);
    }

    std::vector<NodeId> prune_order = members;
    std::sort(prune_order.begin(), prune_order.end(), [&](NodeId a, NodeId b) {
        if (weights[a] != weights[b]) return weights[a] > weights[b];
        if (!keep_priority.empty() && keep_priority[a] != keep_priority[b])
            return keep_priority[a] < keep_priority[b];
        return a > b;
    });
    for (NodeId u : prune_order) {
        bool removable = true;
        for (std::size_t i : incident[u]) {
            const auto& e = edges[i];
            const NodeId other = (e.first == u) ? e.second : e.first;
            if (!in_cover[other]) {
                removable = false;
                break;
            }
        }
        if (removable) in_cover[u] = 0;
    }

    std::vector<NodeId> cover;
    for (NodeId u = 0; u < in_cover.size(); ++u)
        if (in_cover[u]) cover.push_back(u);
    return cover;
}

BisectionResult bisect(const Graph& g, const NodeWeights& w, bool degree_weights,
                       const SpectralConfig& cfg, CoverStrategy strategy) {
    WeightedLaplacianOperator op(g, w, degree_weights);
    FiedlerApproximation fiedler = power_iteration(op, cfg);

    BisectionResult result;
    result.side = sign_split(fiedler.v);
    EdgeCut cut = separating_edges(g, result.side);
    result.separating_edges = std::move(cut.edges);
    result.boundary_nodes = std::move(cut.boundary);

    if (strategy == CoverStrategy::Wvc) {
        // equal-cost cover choices favour high-degree endpoints, which are
        // the likelier articulation points
        std::vector<std::size_t> degree(g.node_count());
        for (NodeId u = 0; u < g.node_count(); ++u) degree[u] = g.degree(u);
        result.removal_cover = weighted_vertex_cover(result.separating_edges, w, degree);
    } else {
        for (NodeId u : result.boundary_nodes)
            if (result.side[u] == Side::M) result.removal_cover.push_back(u);
    }
    for (NodeId u : result.removal_cover) result.cover_cost += w[u];
    return result;
}

} // namespace gnd
