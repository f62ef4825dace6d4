#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gnd/baselines.hpp"
#include "gnd/cost.hpp"
#include "gnd/dismantle.hpp"
#include "gnd/graph.hpp"

namespace py = pybind11;

namespace {

gnd::Graph graph_from_pairs(const std::vector<std::pair<gnd::OriginalId, gnd::OriginalId>>& pairs) {
    std::vector<gnd::OriginalId> ids;
    ids.reserve(pairs.size() * 2);
    for (const auto& [u, v] : pairs) {
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto index_of = [&](gnd::OriginalId id) {
        return static_cast<gnd::NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    std::vector<std::pair<gnd::NodeId, gnd::NodeId>> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.emplace_back(index_of(u), index_of(v));
    const std::size_t n = ids.size();  // read before the move below
    return gnd::Graph::from_edges(n, std::move(edges), std::move(ids));
}

gnd::GndOptions make_options(std::uint64_t seed, double epsilon, std::size_t min_iters,
                             const std::string& cover, const std::string& weight_recompute) {
    gnd::GndOptions opts;
    opts.spectral.rng_seed = seed;
    opts.spectral.epsilon = epsilon;
    opts.spectral.min_iterations = min_iters;
    if (cover == "naive") {
        opts.cover = gnd::CoverStrategy::Naive;
    } else if (cover != "wvc") {
        throw std::invalid_argument("cover must be 'wvc' or 'naive'");
    }
    if (weight_recompute == "original") {
        opts.weight_recompute = gnd::WeightRecompute::Original;
    } else if (weight_recompute != "current") {
        throw std::invalid_argument("weight_recompute must be 'current' or 'original'");
    }
    return opts;
}

} // namespace

PYBIND11_MODULE(_gnd, m) {
    m.doc() = "cost-aware network dismantling via node-weighted spectral cuts";

    py::class_<gnd::Graph>(m, "Graph")
        .def_static("from_pairs", &graph_from_pairs, py::arg("edges"),
                    "build a graph from (u, v) node id pairs; ids may be arbitrary integers")
        .def_property_readonly("node_count", &gnd::Graph::node_count)
        .def_property_readonly("edge_count", &gnd::Graph::edge_count)
        .def("degree", &gnd::Graph::degree, py::arg("node"))
        .def("original_id", &gnd::Graph::original_id, py::arg("node"))
        .def("neighbors",
             [](const gnd::Graph& g, gnd::NodeId v) {
                 auto span = g.neighbors(v);
                 return std::vector<gnd::NodeId>(span.begin(), span.end());
             },
             py::arg("node"))
        .def("__repr__", [](const gnd::Graph& g) {
            return "<Graph n=" + std::to_string(g.node_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("load_edge_list",
          [](const std::string& path) { return gnd::load_edge_list(path).graph; },
          py::arg("path"));

    py::class_<gnd::CostModel>(m, "CostModel")
        .def_static("unit", &gnd::CostModel::unit)
        .def_static("degree", &gnd::CostModel::degree)
        .def_static("external", &gnd::CostModel::external, py::arg("weights"))
        .def_property_readonly("name", &gnd::CostModel::name);

    py::class_<gnd::Removal>(m, "Removal")
        .def_readonly("node", &gnd::Removal::node)
        .def_readonly("cost", &gnd::Removal::cost)
        .def("__repr__", [](const gnd::Removal& r) {
            return "<Removal node=" + std::to_string(r.node) + " cost=" + std::to_string(r.cost) + ">";
        });

    py::class_<gnd::DismantlingPlan>(m, "DismantlingPlan")
        .def_readonly("removals", &gnd::DismantlingPlan::removals)
        .def_readonly("target_size", &gnd::DismantlingPlan::target_size)
        .def_readonly("method", &gnd::DismantlingPlan::method)
        .def("__len__", [](const gnd::DismantlingPlan& p) { return p.removals.size(); });

    py::class_<gnd::TrajectoryPoint>(m, "TrajectoryPoint")
        .def_readonly("step", &gnd::TrajectoryPoint::step)
        .def_readonly("cumulative_cost", &gnd::TrajectoryPoint::cumulative_cost)
        .def_readonly("gcc_fraction", &gnd::TrajectoryPoint::gcc_fraction)
        .def_readonly("gcc_size", &gnd::TrajectoryPoint::gcc_size);

    m.def("gnd",
          [](const gnd::Graph& g, const gnd::CostModel& model, std::size_t target_size,
             std::uint64_t seed, double epsilon, std::size_t min_iters, const std::string& cover,
             const std::string& weight_recompute) {
              return gnd::gnd(g, model, target_size,
                              make_options(seed, epsilon, min_iters, cover, weight_recompute));
          },
          py::arg("graph"), py::arg("model"), py::arg("target_size"), py::arg("seed") = 1,
          py::arg("epsilon") = 1.0, py::arg("min_iters") = 1000, py::arg("cover") = "wvc",
          py::arg("weight_recompute") = "current");

    m.def("gndr", &gnd::gndr, py::arg("graph"), py::arg("plan"), py::arg("model"),
          py::arg("target_size"));

    m.def("random_removal_plan", &gnd::random_removal_plan, py::arg("graph"),
          py::arg("target_size"), py::arg("seed"), py::arg("model") = gnd::CostModel::unit());

    m.def("adaptive_degree_plan", &gnd::adaptive_degree_plan, py::arg("graph"),
          py::arg("target_size"), py::arg("model") = gnd::CostModel::unit());

    m.def("fragmentation_curve", &gnd::fragmentation_curve, py::arg("graph"), py::arg("plan"),
          py::arg("model"));

    m.def("partial_dismantle_cost",
          [](const std::vector<gnd::TrajectoryPoint>& curve, double target_fraction) {
              return gnd::partial_dismantle_cost(curve, target_fraction);
          },
          py::arg("curve"), py::arg("target_fraction"));

    m.def("plan_is_valid", &gnd::plan_is_valid, py::arg("graph"), py::arg("plan"),
          py::arg("max_size"));
}
