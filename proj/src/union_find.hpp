#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gnd/graph.hpp"

namespace gnd::detail {

// Union-find with size tracking over a rolling alive set. Components only
// ever grow, so the running maximum is exact.
struct GrowingForest {
    std::vector<NodeId> parent;
    std::vector<std::uint32_t> size;
    std::vector<char> alive;
    std::size_t max_component = 0;

    explicit GrowingForest(std::size_t n) : parent(n), size(n, 0), alive(n, 0) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<NodeId>(i);
    }
    NodeId find(NodeId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void activate(NodeId v) {
        alive[v] = 1;
        size[v] = 1;
        if (max_component < 1) max_component = 1;
    }
    void unite(NodeId a, NodeId b) {
        NodeId ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (size[ra] < size[rb]) std::swap(ra, rb);
        parent[rb] = ra;
        size[ra] += size[rb];
        if (size[ra] > max_component) max_component = size[ra];
    }
    void link_alive_neighbors(const Graph& g, NodeId v) {
        for (NodeId u : g.neighbors(v))
            if (alive[u]) unite(v, u);
    }
};

} // namespace gnd::detail
