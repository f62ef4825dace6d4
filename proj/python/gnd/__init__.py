"""Cost-aware network dismantling: node-weighted spectral cuts with reinsertion."""

import importlib

try:
    _impl = importlib.import_module("._gnd", __name__)
except ImportError:  # extension built next to the package instead of inside it
    _impl = importlib.import_module("_gnd")

CostModel = _impl.CostModel
DismantlingPlan = _impl.DismantlingPlan
Graph = _impl.Graph
Removal = _impl.Removal
TrajectoryPoint = _impl.TrajectoryPoint
adaptive_degree_plan = _impl.adaptive_degree_plan
fragmentation_curve = _impl.fragmentation_curve
gnd = _impl.gnd
gndr = _impl.gndr
load_edge_list = _impl.load_edge_list
partial_dismantle_cost = _impl.partial_dismantle_cost
plan_is_valid = _impl.plan_is_valid
random_removal_plan = _impl.random_removal_plan

del importlib, _impl

__all__ = [
    "CostModel",
    "DismantlingPlan",
    "Graph",
    "Removal",
    "TrajectoryPoint",
    "adaptive_degree_plan",
    "fragmentation_curve",
    "gnd",
    "gndr",
    "load_edge_list",
    "partial_dismantle_cost",
    "plan_is_valid",
    "random_removal_plan",
]
