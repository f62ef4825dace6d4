#pragma once

#include <cstdint>

#include "gnd/cost.hpp"
#include "gnd/dismantle.hpp"
#include "gnd/graph.hpp"

namespace gnd {

// Site percolation: draw one seeded permutation of all nodes up front and
// remove along it until every component has at most target_size nodes. The
// plan keeps only the prefix that was actually needed. The model prices the
// recorded increments; it does not influence the removal order.
DismantlingPlan random_removal_plan(const Graph& g, std::size_t target_size, std::uint64_t seed,
                                    const CostModel& model = CostModel::unit());

// Targeted attack: repeatedly remove the highest-degree node of the current
// largest component (ties: lowest id) until every component has at most
// target_size nodes.
DismantlingPlan adaptive_degree_plan(const Graph& g, std::size_t target_size,
                                     const CostModel& model = CostModel::unit());

} // namespace gnd
