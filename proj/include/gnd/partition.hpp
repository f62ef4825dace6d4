#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gnd/graph.hpp"
#include "gnd/spectral.hpp"

namespace gnd {

enum class Side : std::uint8_t { M, MBar };

// M for v_i >= 0, MBar otherwise. If every node lands on one side the split
// falls back to the median of v (ties broken by node index) so both sides are
// always non-empty. Throws for vectors shorter than 2.
std::vector<Side> sign_split(std::span<const double> v);

struct EdgeCut {
    std::vector<std::pair<NodeId, NodeId>> edges;  // E*, lexicographic, u < v
    std::vector<NodeId> boundary;                  // V*, ascending
};

EdgeCut separating_edges(const Graph& g, std::span<const Side> side);

// Local-ratio 2-approximation of minimum weighted vertex cover on the given
// edge set. Edges are processed in the order given (callers pass them
// lexicographically sorted, which pins the result); for each uncovered edge
// the smaller residual weight is subtracted from both endpoints and nodes
// reaching zero enter the cover. Redundant cover nodes are pruned afterwards
// in descending (weight, id) order, so among equal-weight choices the lowest
// id survives. A non-empty keep_priority (indexed like weights) refines the
// tie break: equal-weight nodes with lower priority are pruned first, which
// bisect uses to keep high-degree endpoints. Weights must be non-negative.
std::vector<NodeId> weighted_vertex_cover(std::span<const std::pair<NodeId, NodeId>> edges,
                                          std::span<const double> weights,
                                          std::span<const std::size_t> keep_priority = {});

enum class CoverStrategy {
    Wvc,    // weighted vertex cover on (V*, E*)
    Naive,  // remove every M-side boundary node
};

struct BisectionResult {
    std::vector<Side> side;
    std::vector<std::pair<NodeId, NodeId>> separating_edges;  // E*
    std::vector<NodeId> boundary_nodes;                       // V*
    std::vector<NodeId> removal_cover;                        // subset of V*
    double cover_cost = 0.0;
};

// One spectral bisection step on a connected graph with n >= 2: Fiedler
// approximation, sign split, cut extraction, then cover selection with the
// node weights as cover weights.
BisectionResult bisect(const Graph& g, const NodeWeights& w, bool degree_weights,
                       const SpectralConfig& cfg, CoverStrategy strategy = CoverStrategy::Wvc);

} // namespace gnd
