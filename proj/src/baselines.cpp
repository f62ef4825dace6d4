#include "gnd/baselines.hpp"

#include <numeric>
#include <stdexcept>

#include "gnd/rng.hpp"
#include "union_find.hpp"

namespace gnd {

using detail::GrowingForest;

DismantlingPlan random_removal_plan(const Graph& g, std::size_t target_size, std::uint64_t seed,
                                    const CostModel& model) {
    if (target_size < 1) throw std::invalid_argument("random_removal_plan: target_size must be >= 1");

    DismantlingPlan plan;
    plan.target_size = target_size;
    plan.method = "baseline-random";

    const std::size_t n = g.node_count();
    if (n == 0) return plan;

    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    Rng rng(seed);
    rng.shuffle(perm.data(), perm.size());

    // Minimal prefix of the permutation whose removal dismantles the graph,
    // found by adding nodes back in reverse order until a component outgrows
    // the target.
    GrowingForest forest(n);
    std::size_t prefix = 0;
    for (std::size_t j = n; j-- > 0;) {
        forest.activate(perm[j]);
        forest.link_alive_neighbors(g, perm[j]);
        if (forest.max_component > target_size) {
            prefix = j + 1;
            break;
        }
    }

    std::vector<NodeId> order(perm.begin(), perm.begin() + prefix);
    std::vector<double> inc = replay_costs(g, order, model);
    plan.removals.reserve(prefix);
    for (std::size_t i = 0; i < prefix; ++i)
        plan.removals.push_back({g.original_id(order[i]), inc[i]});
    return plan;
}

DismantlingPlan adaptive_degree_plan(const Graph& g, std::size_t target_size,
                                     const CostModel& model) {
    if (target_size < 1) throw std::invalid_argument("adaptive_degree_plan: target_size must be >= 1");

    DismantlingPlan plan;
    plan.target_size = target_size;
    plan.method = "baseline-degree-attack";

    const std::size_t n = g.node_count();
    if (n == 0) return plan;

    std::vector<std::uint32_t> live_deg(n);
    std::vector<char> alive(n, 1);
    for (NodeId v = 0; v < n; ++v) live_deg[v] = static_cast<std::uint32_t>(g.degree(v));

    std::vector<NodeId> comp_of(n);
    std::vector<NodeId> stack;
    std::vector<NodeId> order;

    for (;;) {
        // Current components; remember the largest (ties keep the first
        // discovered, which contains the lowest node id).
        std::fill(comp_of.begin(), comp_of.end(), kInvalidNode);
        NodeId next_label = 0;
        std::size_t best_size = 0;
        NodeId best_label = kInvalidNode;
        for (NodeId s = 0; s < n; ++s) {
            if (!alive[s] || comp_of[s] != kInvalidNode) continue;
            const NodeId label = next_label++;
            std::size_t size = 0;
            stack.push_back(s);
            comp_of[s] = label;
            while (!stack.empty()) {
                NodeId x = stack.back();
                stack.pop_back();
                ++size;
                for (NodeId y : g.neighbors(x)) {
                    if (alive[y] && comp_of[y] == kInvalidNode) {
                        comp_of[y] = label;
                        stack.push_back(y);
                    }
                }
            }
            if (size > best_size) {
                best_size = size;
                best_label = label;
            }
        }
        if (best_size <= target_size) break;

        NodeId victim = kInvalidNode;
        std::uint32_t victim_deg = 0;
        for (NodeId v = 0; v < n; ++v) {
            if (!alive[v] || comp_of[v] != best_label) continue;
            if (victim == kInvalidNode || live_deg[v] > victim_deg) {
                victim = v;
                victim_deg = live_deg[v];
            }
        }
        order.push_back(victim);
        alive[victim] = 0;
        for (NodeId u : g.neighbors(victim))
            if (alive[u]) --live_deg[u];
    }

    std::vector<double> inc = replay_costs(g, order, model);
    plan.removals.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        plan.removals.push_back({g.original_id(order[i]), inc[i]});
    return plan;
}

} // namespace gnd
