#include "gnd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gnd/rng.hpp"

namespace gnd {

std::size_t iteration_budget(std::size_t n, const SpectralConfig& cfg) {
    if (cfg.epsilon < 0.0) throw std::invalid_argument("epsilon must be non-negative");
    if (cfg.min_iterations == 0) throw std::invalid_argument("min_iterations must be positive");
    const double ln = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
    const auto k = static_cast<std::size_t>(std::ceil(std::pow(ln, 1.0 + cfg.epsilon)));
    return std::max(cfg.min_iterations, k);
}

double shift_constant(const Graph& g, const NodeWeights& w, bool degree_weights) {
    if (w.size() != g.node_count())
        throw std::invalid_argument("weight vector length must equal node count");
    const double d_max = static_cast<double>(g.max_degree());
    if (d_max == 0.0) return 1.0;
    if (degree_weights) return 6.0 * d_max * d_max;
    double w_max = 0.0;
    for (const double wi : w) w_max = std::max(w_max, wi);
    return 4.0 * d_max * (w_max + 1.0);
}

WeightedLaplacianOperator::WeightedLaplacianOperator(const Graph& g, NodeWeights w,
                                                     bool degree_weights)
    : graph_(&g), w_(std::move(w)) {
    const std::size_t n = g.node_count();
    if (w_.size() != n) throw std::invalid_argument("weight vector length must equal node count");
    for (const double wi : w_)
        if (wi < 0.0) throw std::invalid_argument("node weights must be non-negative");

    // (D_B)_ii = sum_j A_ij (w_i + w_j - 1) = d_i (w_i - 1) + sum_{j in N(i)} w_j.
    // Neighbor weights are also copied adjacency-aligned so apply_B reads them
    // as a sequential stream instead of gathering w_[j] per edge.
    d_B_.resize(n);
    w_nbr_.reserve(2 * g.edge_count());
    for (NodeId i = 0; i < n; ++i) {
        double s = static_cast<double>(g.degree(i)) * (w_[i] - 1.0);
        for (const NodeId j : g.neighbors(i)) {
            s += w_[j];
            w_nbr_.push_back(w_[j]);
        }
        d_B_[i] = s;
    }
    sigma_ = shift_constant(g, w_, degree_weights);
}

void WeightedLaplacianOperator::check_size(std::size_t len) const {
    if (len != w_.size()) throw std::invalid_argument("vector length must equal node count");
}

void WeightedLaplacianOperator::apply_B(std::span<const double> x, std::span<double> y) const {
    check_size(x.size());
    check_size(y.size());
    const std::size_t n = w_.size();
    std::size_t idx = 0;
    for (NodeId i = 0; i < n; ++i) {
        double plain = 0.0;     // sum of x_j over neighbors
        double weighted = 0.0;  // sum of w_j x_j over neighbors
        for (const NodeId j : graph_->neighbors(i)) {
            const double xj = x[j];
            plain += xj;
            weighted += w_nbr_[idx++] * xj;
        }
        y[i] = (w_[i] - 1.0) * plain + weighted;
    }
}

void WeightedLaplacianOperator::apply_Lw(std::span<const double> x, std::span<double> y) const {
    apply_B(x, y);
    for (std::size_t i = 0; i < w_.size(); ++i) y[i] = d_B_[i] * x[i] - y[i];
}

void WeightedLaplacianOperator::apply_shifted(std::span<const double> x,
                                              std::span<double> y) const {
    apply_B(x, y);
    for (std::size_t i = 0; i < w_.size(); ++i) y[i] = (sigma_ - d_B_[i]) * x[i] + y[i];
}

double WeightedLaplacianOperator::rayleigh_quotient(std::span<const double> x) const {
    check_size(x.size());
    std::vector<double> lx(x.size());
    apply_Lw(x, lx);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += x[i] * lx[i];
        den += x[i] * x[i];
    }
    if (den == 0.0) throw std::invalid_argument("rayleigh quotient of the zero vector");
    return num / den;
}

namespace {

// subtract the mean so the vector is orthogonal to the all-ones vector
void project_out_ones(std::vector<double>& v) {
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (const double x : v) s += x * x;
    return std::sqrt(s);
}

bool draw_start_vector(Rng& rng, std::vector<double>& v) {
    for (double& x : v) x = rng.next_normal();
    const double n0 = norm(v);
    if (n0 == 0.0) return false;
    for (double& x : v) x /= n0;
    project_out_ones(v);
    const double n1 = norm(v);
    if (n1 < 1e-12) return false;
    for (double& x : v) x /= n1;
    return true;
}

} // namespace

FiedlerApproximation power_iteration(const WeightedLaplacianOperator& op,
                                     const SpectralConfig& cfg) {
    const std::size_t n = op.size();
    if (n < 2) throw std::invalid_argument("power iteration needs at least two nodes");

    const std::size_t budget = iteration_budget(n, cfg);
    Rng rng(cfg.rng_seed);

    std::vector<double> v(n), u(n);
    int retries = 0;
    while (!draw_start_vector(rng, v)) {
        if (++retries > 5) throw std::runtime_error("could not draw a usable start vector");
    }

    FiedlerApproximation out;
    std::size_t used = 0;
    for (std::size_t it = 0; it < budget; ++it) {
        op.apply_shifted(v, u);
        // v is a unit vector, so sigma - v.u is the current Rayleigh quotient
        double vu = 0.0;
        for (std::size_t i = 0; i < n; ++i) vu += v[i] * u[i];
        const double rq = op.sigma() - vu;

        // ||L v - rq v|| bounds the distance from rq to the nearest
        // eigenvalue; u still holds sigma v - L v, so the residual is
        // (sigma - rq) v - u
        bool converged = false;
        if (cfg.early_exit_tol > 0.0 && rq > 0.0) {
            double r2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double ri = (op.sigma() - rq) * v[i] - u[i];
                r2 += ri * ri;
            }
            converged = r2 <= cfg.early_exit_tol * cfg.early_exit_tol * rq * rq;
        }

        std::swap(u, v);
        project_out_ones(v);
        const double nv = norm(v);
        if (nv == 0.0) {
            // essentially impossible for a connected graph; start over
            if (++retries > 5) throw std::runtime_error("power iteration collapsed to zero");
            while (!draw_start_vector(rng, v)) {
                if (++retries > 5) throw std::runtime_error("power iteration collapsed to zero");
            }
            continue;
        }
        for (double& x : v) x /= nv;
        used = it + 1;

        if (converged) break;
    }

    // final clean-up so the returned vector meets the unit/orthogonality
    // contract exactly
    project_out_ones(v);
    const double nv = norm(v);
    for (double& x : v) x /= nv;

    // +-v are the same eigenvector; orient so the largest-magnitude entry is
    // positive, which keeps downstream sign splits independent of the start
    std::size_t lead = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
    if (v[lead] < 0.0)
        for (double& x : v) x = -x;

    out.rayleigh = op.rayleigh_quotient(v);
    out.v = std::move(v);
    out.iterations_used = used;
    return out;
}

} // namespace gnd
