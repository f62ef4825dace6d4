#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gnd/graph.hpp"

namespace gnd {

// Per-node removal costs, the diagonal of W.
using NodeWeights = std::vector<double>;

struct SpectralConfig {
    double epsilon = 1.0;            // exponent slack in the iteration budget
    std::size_t min_iterations = 100;
    std::uint64_t rng_seed = 1;
    // Stop once ||L_w v - rq v|| <= early_exit_tol * rq, i.e. once the
    // Rayleigh quotient is certified to within a relative tolerance of an
    // eigenvalue; 0 disables and the full budget is always spent.
    double early_exit_tol = 1e-10;
};

// k = max(min_iterations, ceil(log(n)^(1+epsilon))), natural log.
std::size_t iteration_budget(std::size_t n, const SpectralConfig& cfg);

// Upper bound sigma >= lambda_n for the shift: 6*d_max^2 when the weights are
// the current degrees, 4*d_max*(w_max+1) for general non-negative weights.
// Returns 1 for graphs without edges so the shifted operator stays defined.
double shift_constant(const Graph& g, const NodeWeights& w, bool degree_weights);

// Matrix-free application of the node-weighted Laplacian L_w = D_B - B with
// B = AW + WA - A, and of its shifted form sigma*I - L_w. B and L_w are never
// materialized. Immutable once built; the referenced graph must outlive the
// operator.
class WeightedLaplacianOperator {
public:
    WeightedLaplacianOperator(const Graph& g, NodeWeights w, bool degree_weights);

    std::size_t size() const noexcept { return w_.size(); }
    double sigma() const noexcept { return sigma_; }
    const Graph& graph() const noexcept { return *graph_; }
    const NodeWeights& weights() const noexcept { return w_; }
    std::span<const double> row_sums() const noexcept { return d_B_; }  // diagonal of D_B

    // y = B x, computed as A(Wx) + W(Ax) - Ax in one neighbor sweep
    void apply_B(std::span<const double> x, std::span<double> y) const;
    // y = D_B x - B x
    void apply_Lw(std::span<const double> x, std::span<double> y) const;
    // y = sigma x - L_w x
    void apply_shifted(std::span<const double> x, std::span<double> y) const;

    // x^T (L_w x) / (x^T x); throws on the zero vector
    double rayleigh_quotient(std::span<const double> x) const;

private:
    void check_size(std::size_t len) const;

    const Graph* graph_;
    NodeWeights w_;
    std::vector<double> d_B_;
    std::vector<double> w_nbr_;  // neighbor weights laid out like the adjacency
    double sigma_;
};

struct FiedlerApproximation {
    std::vector<double> v;         // unit vector, orthogonal to the all-ones vector
    double rayleigh = 0.0;         // v^T L_w v
    std::size_t iterations_used = 0;
};

// Power iteration on the shifted operator: random unit start, projection
// against the all-ones kernel vector, then repeated apply-project-normalize.
// Re-projecting every iteration keeps floating-point drift from re-growing
// the kernel component (sigma is the top eigenvalue of the shifted operator).
// Requires n >= 2 and a connected graph; the caller bisects one component at
// a time.
FiedlerApproximation power_iteration(const WeightedLaplacianOperator& op,
                                     const SpectralConfig& cfg);

} // namespace gnd
