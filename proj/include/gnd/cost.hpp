#pragma once

#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gnd/graph.hpp"

namespace gnd {

enum class CostKind { Unit, Degree, External };

// Node-removal cost model. Degree costs are adaptive: the cost of removing a
// node is its degree in the residual graph at the moment of removal, which
// makes the cumulative degree cost equal the fraction of original edges
// removed. External costs are keyed by original node id and a missing id is a
// hard error, never a default.
class CostModel {
public:
    static CostModel unit() { return CostModel(CostKind::Unit); }
    static CostModel degree() { return CostModel(CostKind::Degree); }
    static CostModel external(std::unordered_map<OriginalId, double> weights);

    CostKind kind() const noexcept { return kind_; }
    const char* name() const noexcept;

    double node_cost(const Graph& g_current, NodeId node) const;

    // Costs of every node of g, in internal-id order. This is also the W
    // diagonal handed to the spectral objective.
    std::vector<double> node_costs(const Graph& g) const;

    // |E| for degree, n for unit, sum of weights for external; all taken from
    // the original input graph. Falls back to 1 when the natural value is 0
    // so cumulative cost stays well-defined on degenerate graphs.
    double normalizer(const Graph& original) const;

    // Stored weight for one original id; throws when the id has none.
    double external_weight(OriginalId id) const;

    const std::unordered_map<OriginalId, double>& external_weights() const { return weights_; }

private:
    explicit CostModel(CostKind kind) : kind_(kind) {}

    CostKind kind_;
    std::unordered_map<OriginalId, double> weights_;
};

// Weights file: one "node_id weight" pair per line, '#' comments, blank lines
// ignored; weights must be non-negative and ids unique.
std::unordered_map<OriginalId, double> parse_weights(std::istream& in);
std::unordered_map<OriginalId, double> load_weights(const std::string& path);

// Running record of per-removal raw costs for one dismantling run.
struct CostLedger {
    std::vector<double> increments;
    double normalizer = 1.0;

    void charge(double raw_cost) { increments.push_back(raw_cost); }

    // Normalized cumulative cost after the first `upto` removals.
    double cumulative(std::size_t upto) const;
    double total() const { return cumulative(increments.size()); }
};

} // namespace gnd
