#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gnd {

using NodeId = std::uint32_t;
using OriginalId = std::uint64_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

// Immutable undirected simple graph in CSR form. Neighbor lists are sorted.
// Internal ids are 0..n-1; each node keeps the id it had in the input file,
// so results can always be reported in the caller's id space. Instances are
// safe to share across threads once constructed.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Self-loops are dropped and duplicate
    // edges collapsed, so the result is always simple. Original ids default
    // to 0..n-1. Throws std::out_of_range if an endpoint is >= n.
    static Graph from_edges(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges,
                            std::vector<OriginalId> original_ids = {});

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    std::size_t degree(NodeId v) const {
        check_node(v);
        return offsets_[v + 1] - offsets_[v];
    }

    std::size_t max_degree() const noexcept;

    OriginalId original_id(NodeId v) const {
        check_node(v);
        return original_ids_[v];
    }

    const std::vector<OriginalId>& original_ids() const noexcept { return original_ids_; }

    bool has_edge(NodeId u, NodeId v) const;

    // Visits every edge once as (u, v) with u < v, u ascending.
    template <typename F>
    void for_each_edge(F&& f) const {
        const std::size_t n = node_count();
        for (NodeId u = 0; u < n; ++u) {
            for (std::size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) {
                const NodeId v = adj_[k];
                if (v > u) f(u, v);
            }
        }
    }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_node(NodeId v) const {
        if (v >= node_count()) throw std::out_of_range("node index out of range");
    }

    std::vector<std::size_t> offsets_;      // n+1 entries
    std::vector<NodeId> adj_;               // 2|E| entries, sorted per node
    std::vector<OriginalId> original_ids_;  // n entries
    std::size_t edge_count_ = 0;
};

struct ParseStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_collapsed = 0;
};

struct ParseResult {
    Graph graph;
    ParseStats stats;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    std::size_t line_number;
};

// Edge-list format: one edge per line as two whitespace-separated non-negative
// integers; lines starting with '#' or '%' are comments; blank lines ignored.
// Node ids are compacted to 0..n-1 in ascending original-id order.
// Empty input yields an empty graph.
ParseResult parse_edge_list(std::istream& in);
ParseResult parse_edge_list(std::string_view text);
ParseResult load_edge_list(const std::string& path);

// One "u v" line per edge in ascending order, using original ids.
std::string to_edge_list(const Graph& g);

struct ComponentLabeling {
    std::vector<std::uint32_t> label;  // per node; component of the lowest-index node gets 0
    std::vector<std::size_t> sizes;    // per component
};

ComponentLabeling connected_components(const Graph& g);

// Size of the largest connected component; 0 for the empty graph.
std::size_t gcc_size(const Graph& g);

// Induced subgraph on V minus victims. Original ids carry over.
Graph remove_nodes(const Graph& g, std::span<const NodeId> victims);

struct InducedSubgraph {
    Graph graph;
    std::vector<NodeId> to_parent;    // subgraph id -> parent id, ascending
    std::vector<NodeId> from_parent;  // parent id -> subgraph id, kInvalidNode if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

} // namespace gnd
