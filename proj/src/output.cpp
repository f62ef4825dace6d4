#include "gnd/output.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gnd {

namespace {

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

constexpr const char* kCurveHeader = "step,removed_node,cost_increment,cumulative_cost,gcc_size,gcc_fraction";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_double_field(const std::string& s, std::size_t line_no) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("curve csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
    }
    if (pos != s.size())
        throw std::runtime_error("curve csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
    return v;
}

std::uint64_t parse_uint_field(const std::string& s, std::size_t line_no) {
    std::size_t pos = 0;
    std::uint64_t v;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("curve csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
    }
    if (pos != s.size())
        throw std::runtime_error("curve csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
    return v;
}

} // namespace

void write_curve_csv(std::ostream& out, const DismantlingPlan& plan,
                     std::span<const TrajectoryPoint> curve, double normalizer) {
    if (curve.empty()) throw std::invalid_argument("write_curve_csv: empty trajectory");
    if (curve.size() != plan.removals.size() + 1)
        throw std::invalid_argument("write_curve_csv: plan and curve lengths disagree");
    if (normalizer <= 0.0) throw std::invalid_argument("write_curve_csv: normalizer must be positive");

    out << kCurveHeader << '\n';
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const TrajectoryPoint& p = curve[k];
        out << p.step << ',';
        if (k > 0) out << plan.removals[k - 1].node;
        out << ',' << fmt12(k > 0 ? plan.removals[k - 1].cost / normalizer : 0.0);
        out << ',' << fmt12(p.cumulative_cost);
        out << ',' << p.gcc_size;
        out << ',' << fmt12(p.gcc_fraction) << '\n';
    }
}

ParsedCurve parse_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("curve csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCurveHeader) throw std::runtime_error("curve csv: unexpected header '" + line + "'");

    ParsedCurve parsed;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f = split_fields(line);
        if (f.size() != 6)
            throw std::runtime_error("curve csv line " + std::to_string(line_no) + ": expected 6 fields");

        TrajectoryPoint p;
        p.step = static_cast<std::size_t>(parse_uint_field(f[0], line_no));
        p.cumulative_cost = parse_double_field(f[3], line_no);
        p.gcc_size = static_cast<std::size_t>(parse_uint_field(f[4], line_no));
        p.gcc_fraction = parse_double_field(f[5], line_no);

        const std::size_t expected_step = parsed.points.size();
        if (p.step != expected_step)
            throw std::runtime_error("curve csv line " + std::to_string(line_no) + ": step out of order");
        if (expected_step == 0) {
            if (!f[1].empty())
                throw std::runtime_error("curve csv line " + std::to_string(line_no) +
                                         ": step 0 must have no removed node");
            parse_double_field(f[2], line_no);  // increment column must still be numeric
        } else {
            parsed.removed.push_back(parse_uint_field(f[1], line_no));
            parsed.increments.push_back(parse_double_field(f[2], line_no));
        }
        parsed.points.push_back(p);
    }
    if (parsed.points.empty()) throw std::runtime_error("curve csv: no data rows");
    return parsed;
}

std::string summary_json(const SummaryInfo& info, const DismantlingPlan& plan, double normalizer) {
    if (normalizer <= 0.0) throw std::invalid_argument("summary_json: normalizer must be positive");

    double total = 0.0;
    for (const Removal& r : plan.removals) total += r.cost;

    nlohmann::ordered_json j;
    j["method"] = info.method;
    j["target_size"] = info.target_size;
    j["cost_model"] = info.cost_model;
    j["seed"] = info.seed;
    j["epsilon"] = info.epsilon;
    j["total_cost"] = total;
    j["normalized_cost"] = total / normalizer;
    nlohmann::ordered_json removals = nlohmann::ordered_json::array();
    for (const Removal& r : plan.removals)
        removals.push_back({{"id", r.node}, {"cost", r.cost}});
    j["removals"] = std::move(removals);
    j["wall_time_seconds"] = info.wall_time_seconds;
    return j.dump(2) + "\n";
}

std::string curve_svg(std::span<const TrajectoryPoint> curve) {
    if (curve.empty()) throw std::invalid_argument("curve_svg: empty trajectory");

    constexpr double width = 640.0, height = 440.0;
    constexpr double left = 60.0, right = 20.0, top = 20.0, bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    auto x_of = [&](double cost) { return left + cost * plot_w; };
    auto y_of = [&](double frac) { return top + (1.0 - frac) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // axes with ticks every 0.25
    svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << top + plot_h << "\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << top + plot_h << "\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double t = i / 4.0;
        svg << "<line x1=\"" << fmt6(x_of(t)) << "\" y1=\"" << top + plot_h << "\" x2=\""
            << fmt6(x_of(t)) << "\" y2=\"" << top + plot_h + 5 << "\"/>\n";
        svg << "<line x1=\"" << left - 5 << "\" y1=\"" << fmt6(y_of(t)) << "\" x2=\"" << left
            << "\" y2=\"" << fmt6(y_of(t)) << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double t = i / 4.0;
        svg << "<text x=\"" << fmt6(x_of(t)) << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\">" << fmt6(t) << "</text>\n";
        svg << "<text x=\"" << left - 8 << "\" y=\"" << fmt6(y_of(t) + 4)
            << "\" text-anchor=\"end\">" << fmt6(t) << "</text>\n";
    }
    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">normalized cost</text>\n";
    svg << "<text x=\"14\" y=\"" << top + plot_h / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << top + plot_h / 2
        << ")\">gcc fraction</text>\n";
    svg << "</g>\n";

    // right-continuous step curve
    std::ostringstream path;
    path << 'M' << fmt6(x_of(curve[0].cumulative_cost)) << ' ' << fmt6(y_of(curve[0].gcc_fraction));
    for (std::size_t k = 1; k < curve.size(); ++k) {
        path << " H" << fmt6(x_of(curve[k].cumulative_cost));
        path << " V" << fmt6(y_of(curve[k].gcc_fraction));
    }
    svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

AggregateCurve aggregate_curves(std::span<const std::vector<TrajectoryPoint>> curves) {
    if (curves.empty()) throw std::invalid_argument("aggregate_curves: no curves");
    for (const auto& c : curves)
        if (c.empty()) throw std::invalid_argument("aggregate_curves: empty curve");

    constexpr std::size_t kGridPoints = 101;
    AggregateCurve agg;
    agg.cost.resize(kGridPoints);
    agg.mean.assign(kGridPoints, 0.0);
    agg.stddev.assign(kGridPoints, 0.0);
    for (std::size_t i = 0; i < kGridPoints; ++i) agg.cost[i] = static_cast<double>(i) / 100.0;

    // value of each curve at each grid cost: last point with cost <= grid x
    std::vector<std::vector<double>> sampled(curves.size(), std::vector<double>(kGridPoints));
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const auto& curve = curves[c];
        std::size_t j = 0;
        for (std::size_t i = 0; i < kGridPoints; ++i) {
            const double x = agg.cost[i];
            while (j + 1 < curve.size() && curve[j + 1].cumulative_cost <= x) ++j;
            sampled[c][i] = (curve[0].cumulative_cost <= x) ? curve[j].gcc_fraction : 1.0;
        }
    }

    const double k = static_cast<double>(curves.size());
    for (std::size_t i = 0; i < kGridPoints; ++i) {
        double sum = 0.0;
        for (std::size_t c = 0; c < curves.size(); ++c) sum += sampled[c][i];
        agg.mean[i] = sum / k;
        if (curves.size() > 1) {
            double ss = 0.0;
            for (std::size_t c = 0; c < curves.size(); ++c) {
                const double d = sampled[c][i] - agg.mean[i];
                ss += d * d;
            }
            agg.stddev[i] = std::sqrt(ss / (k - 1.0));
        }
    }
    return agg;
}

void write_aggregate_csv(std::ostream& out, const AggregateCurve& agg) {
    out << "cost,gcc_fraction_mean,gcc_fraction_std\n";
    for (std::size_t i = 0; i < agg.cost.size(); ++i)
        out << fmt12(agg.cost[i]) << ',' << fmt12(agg.mean[i]) << ',' << fmt12(agg.stddev[i]) << '\n';
}

} // namespace gnd
