#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gnd/dismantle.hpp"

namespace gnd {

// One row per trajectory point:
//   step,removed_node,cost_increment,cumulative_cost,gcc_size,gcc_fraction
// removed_node is the original id, left empty on the step-0 row; the
// increment column holds the normalized per-step cost (raw / normalizer).
// Floats are printed with 12 significant digits.
void write_curve_csv(std::ostream& out, const DismantlingPlan& plan,
                     std::span<const TrajectoryPoint> curve, double normalizer);

struct ParsedCurve {
    std::vector<TrajectoryPoint> points;
    std::vector<OriginalId> removed;  // one entry per step >= 1
    std::vector<double> increments;   // normalized, one entry per step >= 1
};

// Inverse of write_curve_csv. Throws std::runtime_error on malformed input.
ParsedCurve parse_curve_csv(std::istream& in);

struct SummaryInfo {
    std::string method;
    std::size_t target_size = 1;
    std::string cost_model;
    std::uint64_t seed = 0;
    double epsilon = 1.0;
    double wall_time_seconds = 0.0;
};

// JSON document with the run parameters, total raw and normalized cost, and
// the removal list with per-node raw costs. Key order is fixed.
std::string summary_json(const SummaryInfo& info, const DismantlingPlan& plan, double normalizer);

// Self-contained SVG of the fragmentation curve: GCC fraction as a step
// function of normalized cumulative cost.
std::string curve_svg(std::span<const TrajectoryPoint> curve);

struct AggregateCurve {
    std::vector<double> cost;      // fixed grid over [0, 1]
    std::vector<double> mean;      // mean gcc_fraction at each grid cost
    std::vector<double> stddev;    // sample standard deviation (0 for one curve)
};

// Samples every curve as a right-continuous step function of cost on a
// 101-point grid and averages across curves.
AggregateCurve aggregate_curves(std::span<const std::vector<TrajectoryPoint>> curves);

// Columns: cost,gcc_fraction_mean,gcc_fraction_std
void write_aggregate_csv(std::ostream& out, const AggregateCurve& agg);

} // namespace gnd
