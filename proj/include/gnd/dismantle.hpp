#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gnd/cost.hpp"
#include "gnd/graph.hpp"
#include "gnd/partition.hpp"
#include "gnd/spectral.hpp"

namespace gnd {

struct Removal {
    OriginalId node;
    double cost;  // raw increment charged when the node was removed
};

struct DismantlingPlan {
    std::vector<Removal> removals;  // in removal order
    std::size_t target_size = 1;    // C
    std::string method;
};

// For the degree cost model the spectral weights W can either track the
// current subgraph at every recursion level or stay fixed at the degrees of
// the input graph. Charged removal costs are adaptive either way.
enum class WeightRecompute { Current, Original };

struct GndOptions {
    SpectralConfig spectral;
    CoverStrategy cover = CoverStrategy::Wvc;
    WeightRecompute weight_recompute = WeightRecompute::Current;
};

// Recursive node-weighted spectral dismantling: repeatedly bisect the largest
// remaining component and remove its cover until every component has at most
// target_size nodes. Removals within one bisection batch happen in ascending
// node id order and charge adaptive costs.
DismantlingPlan gnd(const Graph& g, const CostModel& model, std::size_t target_size,
                    const GndOptions& opts = {});

// Reinsertion refinement: starting from the dismantled graph, greedily give
// back removed nodes while every component stays within target_size, always
// picking the node whose reinsertion creates the smallest merged component
// (ties: lower recorded removal cost, then lower id). Surviving removals keep
// their original order; their costs are replayed from the model. Throws if
// the input plan is not a valid dismantling of g.
DismantlingPlan gndr(const Graph& g, const DismantlingPlan& plan, const CostModel& model,
                     std::size_t target_size);

struct TrajectoryPoint {
    std::size_t step = 0;
    double cumulative_cost = 0.0;  // normalized to [0,1]
    double gcc_fraction = 1.0;     // relative to the original GCC
    std::size_t gcc_size = 0;
};

// Replays the plan against g, pricing every removal with the given model, and
// reports the GCC after each step. Point 0 is the intact graph. Throws if the
// plan references a node g does not have or removes one twice.
std::vector<TrajectoryPoint> fragmentation_curve(const Graph& g, const DismantlingPlan& plan,
                                                 const CostModel& model);

// Smallest cumulative cost at which gcc_fraction <= target_fraction, or
// nullopt when the curve never gets that low. target_fraction must be in
// (0, 1].
std::optional<double> partial_dismantle_cost(std::span<const TrajectoryPoint> curve,
                                             double target_fraction);

// True iff every removal id exists in g, none repeats, and applying the whole
// plan leaves every component with at most max_size nodes.
bool plan_is_valid(const Graph& g, const DismantlingPlan& plan, std::size_t max_size);

// Raw cost increments for removing `order` (internal node ids) from g in
// sequence under `model`. Degree costs are adaptive.
std::vector<double> replay_costs(const Graph& g, std::span<const NodeId> order,
                                 const CostModel& model);

} // namespace gnd
