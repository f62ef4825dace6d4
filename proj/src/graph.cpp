#include "gnd/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace gnd {

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges,
                        std::vector<OriginalId> original_ids) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    // self-loops dropped: the algorithms assume a simple graph
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());

    Graph g;
    g.edge_count_ = edges.size();
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adj_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // edges were processed in sorted order, so each neighbor list is sorted
    // except for the interleaving of the two directions; fix up cheaply.
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));

    if (original_ids.empty()) {
        g.original_ids_.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.original_ids_[i] = i;
    } else {
        if (original_ids.size() != n)
            throw std::invalid_argument("original_ids length must equal node count");
        g.original_ids_ = std::move(original_ids);
    }
    return g;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
        d = std::max(d, offsets_[i + 1] - offsets_[i]);
    return d;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adj_ == b.adj_ && a.original_ids_ == b.original_ids_;
}

namespace {

bool is_comment_or_blank(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) return true;
    return line[i] == '#' || line[i] == '%';
}

} // namespace

ParseResult parse_edge_list(std::istream& in) {
    std::vector<std::pair<OriginalId, OriginalId>> raw_edges;
    std::vector<OriginalId> seen_ids;
    ParseStats stats;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        OriginalId a = 0, b = 0;
        std::string tok1, tok2, extra;
        if (!(ls >> tok1 >> tok2))
            throw ParseError(line_no, "expected two node ids, got '" + line + "'");
        if (ls >> extra)
            throw ParseError(line_no, "trailing token '" + extra + "'");
        try {
            std::size_t pos = 0;
            a = std::stoull(tok1, &pos);
            if (pos != tok1.size()) throw std::invalid_argument(tok1);
            b = std::stoull(tok2, &pos);
            if (pos != tok2.size()) throw std::invalid_argument(tok2);
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed node id in '" + line + "'");
        }
        if (a == b) {
            ++stats.self_loops_dropped;
            seen_ids.push_back(a);
            continue;
        }
        raw_edges.emplace_back(std::min(a, b), std::max(a, b));
        seen_ids.push_back(a);
        seen_ids.push_back(b);
    }

    std::sort(seen_ids.begin(), seen_ids.end());
    seen_ids.erase(std::unique(seen_ids.begin(), seen_ids.end()), seen_ids.end());

    std::unordered_map<OriginalId, NodeId> compact;
    compact.reserve(seen_ids.size());
    for (NodeId i = 0; i < seen_ids.size(); ++i) compact.emplace(seen_ids[i], i);

    std::sort(raw_edges.begin(), raw_edges.end());
    const std::size_t before = raw_edges.size();
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());
    stats.duplicate_edges_collapsed = before - raw_edges.size();

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) edges.emplace_back(compact.at(a), compact.at(b));

    ParseResult result;
    const std::size_t n = seen_ids.size();  // read before the move below
    result.graph = Graph::from_edges(n, std::move(edges), std::move(seen_ids));
    result.stats = stats;
    return result;
}

ParseResult parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

ParseResult load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    g.for_each_edge([&](NodeId u, NodeId v) {
        out += std::to_string(g.original_id(u));
        out += ' ';
        out += std::to_string(g.original_id(v));
        out += '\n';
    });
    return out;
}

ComponentLabeling connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    ComponentLabeling cl;
    cl.label.assign(n, std::numeric_limits<std::uint32_t>::max());

    std::vector<NodeId> stack;
    std::uint32_t next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (cl.label[s] != std::numeric_limits<std::uint32_t>::max()) continue;
        std::size_t size = 0;
        cl.label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (const NodeId v : g.neighbors(u)) {
                if (cl.label[v] == std::numeric_limits<std::uint32_t>::max()) {
                    cl.label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        cl.sizes.push_back(size);
        ++next;
    }
    return cl;
}

std::size_t gcc_size(const Graph& g) {
    const auto cl = connected_components(g);
    std::size_t best = 0;
    for (const std::size_t s : cl.sizes) best = std::max(best, s);
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
    const std::size_t n = g.node_count();
    InducedSubgraph out;
    out.to_parent.assign(keep.begin(), keep.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                        out.to_parent.end());
    for (const NodeId v : out.to_parent)
        if (v >= n) throw std::out_of_range("keep set contains node out of range");

    out.from_parent.assign(n, kInvalidNode);
    for (NodeId i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = i;

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<OriginalId> ids;
    ids.reserve(out.to_parent.size());
    for (const NodeId p : out.to_parent) {
        ids.push_back(g.original_id(p));
        for (const NodeId q : g.neighbors(p)) {
            if (q > p && out.from_parent[q] != kInvalidNode)
                edges.emplace_back(out.from_parent[p], out.from_parent[q]);
        }
    }
    out.graph = Graph::from_edges(out.to_parent.size(), std::move(edges), std::move(ids));
    return out;
}

Graph remove_nodes(const Graph& g, std::span<const NodeId> victims) {
    const std::size_t n = g.node_count();
    std::vector<bool> gone(n, false);
    for (const NodeId v : victims) {
        if (v >= n) throw std::out_of_range("victim node out of range");
        gone[v] = true;
    }
    std::vector<NodeId> keep;
    keep.reserve(n);
    for (NodeId v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

} // namespace gnd
