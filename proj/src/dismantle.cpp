#include "gnd/dismantle.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "gnd/rng.hpp"
#include "union_find.hpp"

namespace gnd {

using detail::GrowingForest;

namespace {

NodeId resolve_original_id(const Graph& g, OriginalId id) {
    const auto& ids = g.original_ids();
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id)
        throw std::invalid_argument("plan references unknown node id " + std::to_string(id));
    return static_cast<NodeId>(it - ids.begin());
}

std::vector<NodeId> resolve_plan_order(const Graph& g, const DismantlingPlan& plan) {
    std::vector<NodeId> order;
    order.reserve(plan.removals.size());
    std::vector<char> seen(g.node_count(), 0);
    for (const Removal& r : plan.removals) {
        NodeId v = resolve_original_id(g, r.node);
        if (seen[v]) throw std::invalid_argument("plan removes node " + std::to_string(r.node) + " twice");
        seen[v] = 1;
        order.push_back(v);
    }
    return order;
}

} // namespace

std::vector<double> replay_costs(const Graph& g, std::span<const NodeId> order,
                                 const CostModel& model) {
    std::vector<double> inc(order.size());
    switch (model.kind()) {
    case CostKind::Unit:
        std::fill(inc.begin(), inc.end(), 1.0);
        break;
    case CostKind::External:
        for (std::size_t i = 0; i < order.size(); ++i)
            inc[i] = model.external_weight(g.original_id(order[i]));
        break;
    case CostKind::Degree: {
        std::vector<std::uint32_t> live_deg(g.node_count());
        std::vector<char> alive(g.node_count(), 1);
        for (NodeId v = 0; v < g.node_count(); ++v) live_deg[v] = static_cast<std::uint32_t>(g.degree(v));
        for (std::size_t i = 0; i < order.size(); ++i) {
            const NodeId v = order[i];
            inc[i] = live_deg[v];
            alive[v] = 0;
            for (NodeId u : g.neighbors(v))
                if (alive[u]) --live_deg[u];
        }
        break;
    }
    }
    return inc;
}

DismantlingPlan gnd(const Graph& g, const CostModel& model, std::size_t target_size,
                    const GndOptions& opts) {
    if (target_size < 1) throw std::invalid_argument("gnd: target_size must be >= 1");

    DismantlingPlan plan;
    plan.target_size = target_size;
    plan.method = "gnd";

    const std::size_t n = g.node_count();
    if (n == 0) return plan;

    // Original degrees double as the fixed W when weight recomputation is off.
    std::vector<std::uint32_t> live_deg(n);
    std::vector<char> alive(n, 1);
    for (NodeId v = 0; v < n; ++v) live_deg[v] = static_cast<std::uint32_t>(g.degree(v));

    // Components pending fragmentation, largest first; ties go to the lowest
    // leading node id so runs are reproducible.
    std::vector<std::vector<NodeId>> store;
    struct QueueEntry {
        std::size_t size;
        NodeId head;
        std::size_t idx;
    };
    auto cmp = [](const QueueEntry& a, const QueueEntry& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.head > b.head;
    };
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, decltype(cmp)> queue(cmp);

    auto enqueue = [&](std::vector<NodeId> comp) {
        if (comp.size() <= target_size) return;
        std::sort(comp.begin(), comp.end());
        QueueEntry e{comp.size(), comp.front(), store.size()};
        store.push_back(std::move(comp));
        queue.push(e);
    };

    {
        ComponentLabeling labeling = connected_components(g);
        std::vector<std::vector<NodeId>> comps(labeling.sizes.size());
        for (std::size_t c = 0; c < comps.size(); ++c) comps[c].reserve(labeling.sizes[c]);
        for (NodeId v = 0; v < n; ++v) comps[labeling.label[v]].push_back(v);
        for (auto& comp : comps) enqueue(std::move(comp));
    }

    const bool degree_weights =
        model.kind() == CostKind::Degree && opts.weight_recompute == WeightRecompute::Current;
    std::uint64_t bisection_counter = 0;

    while (!queue.empty()) {
        const QueueEntry entry = queue.top();
        queue.pop();
        std::vector<NodeId> comp = std::move(store[entry.idx]);

        InducedSubgraph sub = induced_subgraph(g, comp);
        const Graph& h = sub.graph;
        const std::size_t hn = h.node_count();

        NodeWeights w(hn);
        switch (model.kind()) {
        case CostKind::Unit:
            std::fill(w.begin(), w.end(), 1.0);
            break;
        case CostKind::Degree:
            if (opts.weight_recompute == WeightRecompute::Current) {
                for (NodeId i = 0; i < hn; ++i) w[i] = static_cast<double>(h.degree(i));
            } else {
                for (NodeId i = 0; i < hn; ++i)
                    w[i] = static_cast<double>(g.degree(sub.to_parent[i]));
            }
            break;
        case CostKind::External:
            for (NodeId i = 0; i < hn; ++i)
                w[i] = model.external_weight(h.original_id(i));
            break;
        }

        SpectralConfig cfg = opts.spectral;
        cfg.rng_seed = Rng::mix(opts.spectral.rng_seed, bisection_counter++);
        BisectionResult bis = bisect(h, w, degree_weights, cfg, opts.cover);

        // Cover ids are ascending in h; to_parent is monotone, so the batch
        // is ascending in the input graph as well.
        std::vector<char> removed_in_h(hn, 0);
        for (NodeId hv : bis.removal_cover) {
            removed_in_h[hv] = 1;
            const NodeId v = sub.to_parent[hv];
            double increment = 0.0;
            switch (model.kind()) {
            case CostKind::Unit: increment = 1.0; break;
            case CostKind::Degree: increment = live_deg[v]; break;
            case CostKind::External: increment = model.external_weight(g.original_id(v)); break;
            }
            plan.removals.push_back({g.original_id(v), increment});
            alive[v] = 0;
            for (NodeId u : g.neighbors(v))
                if (alive[u]) --live_deg[u];
        }

        // Split the survivors of this component and queue the still-too-big
        // pieces. BFS over h, skipping removed nodes.
        std::vector<char> visited = removed_in_h;
        std::vector<NodeId> stack;
        for (NodeId start = 0; start < hn; ++start) {
            if (visited[start]) continue;
            std::vector<NodeId> piece;
            stack.push_back(start);
            visited[start] = 1;
            while (!stack.empty()) {
                NodeId x = stack.back();
                stack.pop_back();
                piece.push_back(sub.to_parent[x]);
                for (NodeId y : h.neighbors(x)) {
                    if (!visited[y]) {
                        visited[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            enqueue(std::move(piece));
        }
    }

    return plan;
}

DismantlingPlan gndr(const Graph& g, const DismantlingPlan& plan, const CostModel& model,
                     std::size_t target_size) {
    if (target_size < 1) throw std::invalid_argument("gndr: target_size must be >= 1");
    if (!plan_is_valid(g, plan, target_size))
        throw std::invalid_argument("gndr: input plan is not a valid dismantling");

    const std::size_t n = g.node_count();
    std::vector<NodeId> order = resolve_plan_order(g, plan);

    GrowingForest forest(n);
    std::vector<char> removed(n, 0);
    for (NodeId v : order) removed[v] = 1;
    for (NodeId v = 0; v < n; ++v)
        if (!removed[v]) forest.activate(v);
    for (NodeId v = 0; v < n; ++v)
        if (!removed[v]) forest.link_alive_neighbors(g, v);

    // Size of the component created by reinserting v right now. Only grows as
    // other nodes come back, which makes the lazy heap below sound.
    std::vector<NodeId> roots;
    auto merged_size = [&](NodeId v) {
        roots.clear();
        std::size_t total = 1;
        for (NodeId u : g.neighbors(v)) {
            if (!forest.alive[u]) continue;
            NodeId r = forest.find(u);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
                roots.push_back(r);
                total += forest.size[r];
            }
        }
        return total;
    };

    struct HeapEntry {
        std::size_t merged;
        double cost;
        OriginalId id;
        NodeId v;
        bool operator>(const HeapEntry& o) const {
            if (merged != o.merged) return merged > o.merged;
            if (cost != o.cost) return cost > o.cost;
            return id > o.id;
        }
    };
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const NodeId v = order[i];
        const std::size_t m = merged_size(v);
        if (m <= target_size) heap.push({m, plan.removals[i].cost, plan.removals[i].node, v});
    }

    std::vector<char> reinserted(n, 0);
    while (!heap.empty()) {
        HeapEntry e = heap.top();
        heap.pop();
        if (reinserted[e.v]) continue;
        const std::size_t current = merged_size(e.v);
        if (current > target_size) continue;  // stale and now too big, forever
        if (current != e.merged) {
            e.merged = current;
            heap.push(e);  // stale but still eligible, requeue with fresh key
            continue;
        }
        reinserted[e.v] = 1;
        forest.activate(e.v);
        forest.link_alive_neighbors(g, e.v);
    }

    DismantlingPlan refined;
    refined.target_size = target_size;
    refined.method = "gndr";
    std::vector<NodeId> surviving_order;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!reinserted[order[i]]) {
            refined.removals.push_back({plan.removals[i].node, 0.0});
            surviving_order.push_back(order[i]);
        }
    }
    std::vector<double> inc = replay_costs(g, surviving_order, model);
    for (std::size_t i = 0; i < inc.size(); ++i) refined.removals[i].cost = inc[i];
    return refined;
}

std::vector<TrajectoryPoint> fragmentation_curve(const Graph& g, const DismantlingPlan& plan,
                                                 const CostModel& model) {
    const std::size_t n = g.node_count();
    std::vector<NodeId> order = resolve_plan_order(g, plan);
    std::vector<double> inc = replay_costs(g, order, model);
    const double normalizer = model.normalizer(g);

    // GCC size after every prefix, built backwards: start from the fully
    // dismantled graph and give nodes back in reverse removal order.
    const std::size_t steps = order.size();
    std::vector<std::size_t> gcc_after(steps + 1, 0);
    GrowingForest forest(n);
    std::vector<char> removed(n, 0);
    for (NodeId v : order) removed[v] = 1;
    for (NodeId v = 0; v < n; ++v)
        if (!removed[v]) forest.activate(v);
    for (NodeId v = 0; v < n; ++v)
        if (!removed[v]) forest.link_alive_neighbors(g, v);
    gcc_after[steps] = forest.max_component;
    for (std::size_t k = steps; k-- > 0;) {
        const NodeId v = order[k];
        forest.activate(v);
        forest.link_alive_neighbors(g, v);
        gcc_after[k] = forest.max_component;
    }

    const std::size_t original_gcc = gcc_after[0];
    auto fraction = [&](std::size_t size) {
        return original_gcc == 0 ? 1.0 : static_cast<double>(size) / static_cast<double>(original_gcc);
    };

    std::vector<TrajectoryPoint> curve(steps + 1);
    curve[0] = {0, 0.0, 1.0, original_gcc};
    // accumulate raw and divide once: keeps unit-cost cumulatives at exactly k/n
    double cum_raw = 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
        cum_raw += inc[k - 1];
        curve[k] = {k, cum_raw / normalizer, fraction(gcc_after[k]), gcc_after[k]};
    }
    return curve;
}

std::optional<double> partial_dismantle_cost(std::span<const TrajectoryPoint> curve,
                                             double target_fraction) {
    if (!(target_fraction > 0.0) || target_fraction > 1.0)
        throw std::invalid_argument("partial_dismantle_cost: target_fraction must be in (0, 1]");
    for (const TrajectoryPoint& p : curve)
        if (p.gcc_fraction <= target_fraction) return p.cumulative_cost;
    return std::nullopt;
}

bool plan_is_valid(const Graph& g, const DismantlingPlan& plan, std::size_t max_size) {
    std::vector<NodeId> order;
    try {
        order = resolve_plan_order(g, plan);
    } catch (const std::invalid_argument&) {
        return false;
    }
    GrowingForest forest(g.node_count());
    std::vector<char> removed(g.node_count(), 0);
    for (NodeId v : order) removed[v] = 1;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!removed[v]) forest.activate(v);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!removed[v]) forest.link_alive_neighbors(g, v);
    return forest.max_component <= max_size;
}

} // namespace gnd
