#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gnd/graph.hpp"

namespace testsupport {

inline gnd::Graph path_graph(std::size_t n) {
    std::vector<std::pair<gnd::NodeId, gnd::NodeId>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<gnd::NodeId>(i), static_cast<gnd::NodeId>(i + 1));
    return gnd::Graph::from_edges(n, std::move(edges));
}

inline gnd::Graph cycle_graph(std::size_t n) {
    std::vector<std::pair<gnd::NodeId, gnd::NodeId>> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<gnd::NodeId>(i), static_cast<gnd::NodeId>((i + 1) % n));
    return gnd::Graph::from_edges(n, std::move(edges));
}

// node 0 is the hub
inline gnd::Graph star_graph(std::size_t leaves) {
    std::vector<std::pair<gnd::NodeId, gnd::NodeId>> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.emplace_back(0, static_cast<gnd::NodeId>(i));
    return gnd::Graph::from_edges(leaves + 1, std::move(edges));
}

inline gnd::Graph complete_graph(std::size_t n) {
    std::vector<std::pair<gnd::NodeId, gnd::NodeId>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<gnd::NodeId>(i), static_cast<gnd::NodeId>(j));
    return gnd::Graph::from_edges(n, std::move(edges));
}

// triangles {0,1,2} and {3,4,5} joined by the bridge 2-3
inline gnd::Graph two_triangles_bridge() {
    return gnd::Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

} // namespace testsupport
