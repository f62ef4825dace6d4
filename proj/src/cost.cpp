#include "gnd/cost.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gnd {

CostModel CostModel::external(std::unordered_map<OriginalId, double> weights) {
    for (const auto& [id, w] : weights) {
        if (w < 0.0)
            throw std::invalid_argument("negative external weight for node " + std::to_string(id));
    }
    CostModel m(CostKind::External);
    m.weights_ = std::move(weights);
    return m;
}

const char* CostModel::name() const noexcept {
    switch (kind_) {
        case CostKind::Unit: return "unit";
        case CostKind::Degree: return "degree";
        case CostKind::External: return "external";
    }
    return "?";
}

double CostModel::node_cost(const Graph& g_current, NodeId node) const {
    switch (kind_) {
        case CostKind::Unit:
            g_current.degree(node);  // range check
            return 1.0;
        case CostKind::Degree:
            return static_cast<double>(g_current.degree(node));
        case CostKind::External: {
            const auto it = weights_.find(g_current.original_id(node));
            if (it == weights_.end())
                throw std::runtime_error("no external weight for node id " +
                                         std::to_string(g_current.original_id(node)));
            return it->second;
        }
    }
    return 0.0;
}

double CostModel::external_weight(OriginalId id) const {
    const auto it = weights_.find(id);
    if (it == weights_.end())
        throw std::runtime_error("no external weight for node id " + std::to_string(id));
    return it->second;
}

std::vector<double> CostModel::node_costs(const Graph& g) const {
    const std::size_t n = g.node_count();
    std::vector<double> costs(n);
    for (NodeId v = 0; v < n; ++v) costs[v] = node_cost(g, v);
    return costs;
}

double CostModel::normalizer(const Graph& original) const {
    double norm = 0.0;
    switch (kind_) {
        case CostKind::Unit:
            norm = static_cast<double>(original.node_count());
            break;
        case CostKind::Degree:
            norm = static_cast<double>(original.edge_count());
            break;
        case CostKind::External:
            for (NodeId v = 0; v < original.node_count(); ++v) norm += node_cost(original, v);
            break;
    }
    return norm > 0.0 ? norm : 1.0;
}

std::unordered_map<OriginalId, double> parse_weights(std::istream& in) {
    std::unordered_map<OriginalId, double> weights;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;
        std::istringstream ls(line);
        OriginalId id;
        double w;
        std::string extra;
        if (!(ls >> id >> w) || (ls >> extra))
            throw ParseError(line_no, "expected 'node_id weight', got '" + line + "'");
        if (w < 0.0) throw ParseError(line_no, "negative weight");
        if (!weights.emplace(id, w).second)
            throw ParseError(line_no, "duplicate weight for node id " + std::to_string(id));
    }
    return weights;
}

std::unordered_map<OriginalId, double> load_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open weights file: " + path);
    return parse_weights(in);
}

double CostLedger::cumulative(std::size_t upto) const {
    if (upto > increments.size()) throw std::out_of_range("ledger step out of range");
    double sum = 0.0;
    for (std::size_t i = 0; i < upto; ++i) sum += increments[i];
    return sum / normalizer;
}

} // namespace gnd
