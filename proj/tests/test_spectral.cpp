#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "gnd/graph.hpp"
#include "gnd/rng.hpp"
#include "gnd/spectral.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using gnd::Graph;
using gnd::NodeId;
using gnd::NodeWeights;
using gnd::SpectralConfig;
using gnd::WeightedLaplacianOperator;

namespace {

NodeWeights degree_weights_of(const Graph& g) {
    NodeWeights w(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) w[v] = static_cast<double>(g.degree(v));
    return w;
}

std::vector<double> apply_dense(const std::vector<std::vector<double>>& m,
                                const std::vector<double>& x) {
    std::vector<double> y(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) y[i] += m[i][j] * x[j];
    return y;
}

std::vector<double> random_vector(std::size_t n, gnd::Rng& rng) {
    std::vector<double> x(n);
    for (auto& xi : x) xi = rng.next_normal();
    return x;
}

} // namespace

TEST_CASE("iteration_budget") {
    SpectralConfig cfg;
    cfg.min_iterations = 100;
    cfg.epsilon = 1.0;
    CHECK(gnd::iteration_budget(3, cfg) == 100);     // ceil(ln(3)^2) = 2, floor wins
    CHECK(gnd::iteration_budget(30000, cfg) == 107); // ceil(10.3089^2) = 107
    cfg.min_iterations = 5;
    CHECK(gnd::iteration_budget(3, cfg) == 5);
    cfg.epsilon = 0.0;
    CHECK(gnd::iteration_budget(100, cfg) == 5);     // ceil(ln 100) = 5
    cfg.min_iterations = 1;
    CHECK(gnd::iteration_budget(100, cfg) == 5);
}

TEST_CASE("shift_constant") {
    const auto p3 = testsupport::path_graph(3);
    CHECK(gnd::shift_constant(p3, degree_weights_of(p3), true) == 24.0);  // 6 * 2^2

    const auto k2 = testsupport::path_graph(2);
    CHECK(gnd::shift_constant(k2, degree_weights_of(k2), true) == 6.0);
    CHECK(gnd::shift_constant(k2, NodeWeights{5.0, 2.0}, false) == 24.0); // 4 * 1 * (5+1)

    // no edges: the shift bottoms out at 1 so the iteration stays defined
    const auto lonely = Graph::from_edges(1, {});
    CHECK(gnd::shift_constant(lonely, NodeWeights{3.0}, false) == 1.0);
}

TEST_CASE("operator rejects bad input") {
    const auto g = testsupport::path_graph(3);
    CHECK_THROWS(WeightedLaplacianOperator(g, NodeWeights{1.0, 2.0}, false));
    CHECK_THROWS(WeightedLaplacianOperator(g, NodeWeights{1.0, -2.0, 1.0}, false));
    WeightedLaplacianOperator op(g, degree_weights_of(g), true);
    std::vector<double> x(3, 1.0), y(2, 0.0);
    CHECK_THROWS(op.apply_B(x, y));
    CHECK_THROWS(op.rayleigh_quotient(std::vector<double>{0.0, 0.0, 0.0}));
}

TEST_CASE("apply_B on the two-edge path with degree weights") {
    const auto g = testsupport::path_graph(3);
    WeightedLaplacianOperator op(g, degree_weights_of(g), true);
    std::vector<double> y(3, -1.0);
    op.apply_B(std::vector<double>{1.0, 0.0, 0.0}, y);
    CHECK(y == std::vector<double>{0.0, 2.0, 0.0});
    op.apply_B(std::vector<double>{0.0, 1.0, 0.0}, y);
    CHECK(y == std::vector<double>{2.0, 0.0, 2.0});
}

TEST_CASE("weighted laplacian of the two-edge path") {
    const auto g = testsupport::path_graph(3);
    const auto w = degree_weights_of(g);
    const std::vector<std::vector<double>> expected{
        {2.0, -2.0, 0.0}, {-2.0, 4.0, -2.0}, {0.0, -2.0, 2.0}};

    // dense assembly from the definition and the matrix-free operator agree
    CHECK(testsupport::dense_lw(g, w) == expected);
    WeightedLaplacianOperator op(g, w, true);
    for (std::size_t col = 0; col < 3; ++col) {
        std::vector<double> e(3, 0.0), y(3, 0.0);
        e[col] = 1.0;
        op.apply_Lw(e, y);
        for (std::size_t row = 0; row < 3; ++row)
            CHECK(y[row] == doctest::Approx(expected[row][col]).epsilon(1e-14));
    }

    std::vector<double> y(3, 0.0);
    op.apply_Lw(std::vector<double>{1.0, 0.0, -1.0}, y);
    CHECK(y == std::vector<double>{2.0, 0.0, -2.0});  // eigenvector, eigenvalue 2
    CHECK(op.rayleigh_quotient(std::vector<double>{1.0, 0.0, -1.0}) == doctest::Approx(2.0));

    const auto spectrum = testsupport::lw_spectrum(g, w);
    REQUIRE(spectrum.size() == 3);
    CHECK(spectrum[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(spectrum[1] == doctest::Approx(2.0));
    CHECK(spectrum[2] == doctest::Approx(6.0));
}

TEST_CASE("star spectrum is degenerate") {
    const auto g = testsupport::star_graph(3);
    const auto spectrum = testsupport::lw_spectrum(g, degree_weights_of(g));
    REQUIRE(spectrum.size() == 4);
    CHECK(spectrum[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(spectrum[1] == doctest::Approx(3.0));
    CHECK(spectrum[2] == doctest::Approx(3.0));
    CHECK(spectrum[3] == doctest::Approx(12.0));
}

TEST_CASE("apply_shifted is sigma*x - L*x") {
    gnd::Rng rng(12);
    const auto g = testsupport::random_connected(25, 0.3, rng);
    WeightedLaplacianOperator op(g, degree_weights_of(g), true);
    const auto x = random_vector(g.node_count(), rng);
    std::vector<double> lx(x.size()), sx(x.size());
    op.apply_Lw(x, lx);
    op.apply_shifted(x, sx);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(sx[i] == doctest::Approx(op.sigma() * x[i] - lx[i]).epsilon(1e-12));
}

TEST_CASE("power iteration on the two-edge path") {
    const auto g = testsupport::path_graph(3);
    WeightedLaplacianOperator op(g, degree_weights_of(g), true);
    SpectralConfig cfg;
    cfg.min_iterations = 300;
    const auto fiedler = gnd::power_iteration(op, cfg);
    CHECK(fiedler.rayleigh == doctest::Approx(2.0).epsilon(1e-6));
    // v is +-(1,0,-1)/sqrt(2)
    const double overlap =
        std::abs(fiedler.v[0] - fiedler.v[2]) / std::sqrt(2.0);
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::abs(fiedler.v[1]) < 1e-4);
}

TEST_CASE("power iteration on the star settles in the degenerate eigenspace") {
    const auto g = testsupport::star_graph(3);
    WeightedLaplacianOperator op(g, degree_weights_of(g), true);
    SpectralConfig cfg;
    cfg.min_iterations = 400;
    const auto fiedler = gnd::power_iteration(op, cfg);
    CHECK(fiedler.rayleigh == doctest::Approx(3.0).epsilon(1e-6));
    std::vector<double> lv(4);
    op.apply_Lw(fiedler.v, lv);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(lv[i] == doctest::Approx(3.0 * fiedler.v[i]).epsilon(1e-4));
}

TEST_CASE("power iteration on one edge is exact") {
    const auto g = testsupport::path_graph(2);
    WeightedLaplacianOperator op(g, degree_weights_of(g), true);
    const auto fiedler = gnd::power_iteration(op, SpectralConfig{});
    CHECK(fiedler.rayleigh == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(fiedler.v[0] + fiedler.v[1]) < 1e-12);
    CHECK(std::abs(std::abs(fiedler.v[0]) - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("power iteration needs two nodes") {
    const auto g = Graph::from_edges(1, {});
    WeightedLaplacianOperator op(g, NodeWeights{1.0}, false);
    CHECK_THROWS(gnd::power_iteration(op, SpectralConfig{}));
}

TEST_CASE("fiedler approximation is unit norm and mean free") {
    gnd::Rng rng(314);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testsupport::random_connected(10 + rng.next_below(80), 0.2, rng);
        WeightedLaplacianOperator op(g, degree_weights_of(g), true);
        SpectralConfig cfg;
        cfg.rng_seed = 1000 + trial;
        const auto fiedler = gnd::power_iteration(op, cfg);
        double norm2 = 0.0, mean = 0.0;
        for (double vi : fiedler.v) {
            norm2 += vi * vi;
            mean += vi;
        }
        CHECK(std::abs(std::sqrt(norm2) - 1.0) < 1e-12);
        CHECK(std::abs(mean) < 1e-9);
        CHECK(fiedler.iterations_used >= 1);
        CHECK(fiedler.iterations_used <= gnd::iteration_budget(g.node_count(), cfg));
    }
}

TEST_CASE("operator is symmetric") {
    gnd::Rng rng(271828);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testsupport::gnp(30, 0.15, rng);
        NodeWeights w(g.node_count());
        for (auto& wi : w) wi = rng.next_double() * 10.0;
        WeightedLaplacianOperator op(g, w, false);
        const auto x = random_vector(g.node_count(), rng);
        const auto y = random_vector(g.node_count(), rng);
        std::vector<double> lx(x.size()), ly(y.size());
        op.apply_Lw(x, lx);
        op.apply_Lw(y, ly);
        double xly = 0.0, ylx = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            xly += x[i] * ly[i];
            ylx += y[i] * lx[i];
            scale += std::abs(x[i] * ly[i]);
        }
        CHECK(std::abs(xly - ylx) <= 1e-9 * std::max(1.0, scale));
    }
}

TEST_CASE("quadratic form is nonnegative") {
    gnd::Rng rng(161803);
    const auto g = testsupport::gnm(60, 180, rng);
    NodeWeights w(g.node_count());
    for (auto& wi : w) wi = rng.next_double() * 10.0;
    WeightedLaplacianOperator op(g, w, false);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = random_vector(g.node_count(), rng);
        CHECK(op.rayleigh_quotient(x) >= -1e-9 * op.sigma());
    }
}

TEST_CASE("constant vectors are in the kernel") {
    gnd::Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testsupport::gnp(40, 0.1, rng);
        const auto w = degree_weights_of(g);
        WeightedLaplacianOperator op(g, w, true);
        std::vector<double> ones(g.node_count(), 1.0), y(g.node_count());
        op.apply_Lw(ones, y);
        for (double yi : y) CHECK(std::abs(yi) <= 1e-9 * op.sigma());
    }
}

TEST_CASE("spectrum fits under the shift") {
    gnd::Rng rng(8128);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = testsupport::largest_component(
            testsupport::gnp(10 + rng.next_below(50), 0.15, rng));
        if (g.node_count() < 2) continue;

        const auto wd = degree_weights_of(g);
        const double dmax = static_cast<double>(g.max_degree());
        double lmax = testsupport::lw_spectrum(g, wd).back();
        CHECK(lmax <= 6.0 * dmax * dmax * (1.0 + 1e-12));
        CHECK(lmax <= gnd::shift_constant(g, wd, true) * (1.0 + 1e-12));

        NodeWeights wr(g.node_count());
        double wmax = 0.0;
        for (auto& wi : wr) {
            wi = rng.next_double() * 10.0;
            wmax = std::max(wmax, wi);
        }
        lmax = testsupport::lw_spectrum(g, wr).back();
        CHECK(lmax <= 4.0 * dmax * (wmax + 1.0) * (1.0 + 1e-12));
        CHECK(lmax <= gnd::shift_constant(g, wr, false) * (1.0 + 1e-12));
    }
}

TEST_CASE("unit weights reduce to the combinatorial laplacian") {
    gnd::Rng rng(1729);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testsupport::gnp(5 + rng.next_below(40), 0.2, rng);
        const std::size_t n = g.node_count();
        // build D - A straight from adjacency, no shared code with dense_lw
        std::vector<std::vector<double>> da(n, std::vector<double>(n, 0.0));
        g.for_each_edge([&](NodeId u, NodeId v) {
            da[u][v] -= 1.0;
            da[v][u] -= 1.0;
            da[u][u] += 1.0;
            da[v][v] += 1.0;
        });
        CHECK(testsupport::dense_lw(g, NodeWeights(n, 1.0)) == da);

        WeightedLaplacianOperator op(g, NodeWeights(n, 1.0), false);
        const auto x = random_vector(n, rng);
        std::vector<double> y(n);
        op.apply_Lw(x, y);
        const auto ref = apply_dense(da, x);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y[i] - ref[i]) <= 1e-12);
    }
}

TEST_CASE("rayleigh quotient tracks dense lambda2 on well separated graphs") {
    // The plain iteration budget is far too small for tight accuracy because
    // the shifted spectrum is extremely flat (the convergence ratio is about
    // 1 - gap/sigma). A large floor plus the residual early exit gets there
    // cheaply; see tests/acceptance for the full sweep.
    gnd::Rng rng(62);
    int tested = 0;
    for (int trial = 0; tested < 20 && trial < 200; ++trial) {
        gnd::Graph g = (trial % 2 == 0)
                           ? testsupport::largest_component(testsupport::gnp(60, 0.08, rng))
                           : testsupport::barabasi_albert(60, 2, rng);
        if (g.node_count() < 4) continue;
        const auto w = degree_weights_of(g);
        const auto eigs = testsupport::lw_eigs(g, w);
        if (eigs.lambda3 - eigs.lambda2 < 0.01) continue;

        WeightedLaplacianOperator op(g, w, true);
        SpectralConfig cfg;
        cfg.min_iterations = 20000;
        cfg.early_exit_tol = 1e-12;
        cfg.rng_seed = 90 + trial;
        const auto fiedler = gnd::power_iteration(op, cfg);
        CHECK(std::abs(fiedler.rayleigh - eigs.lambda2) <= 0.05 * eigs.lambda2);
        ++tested;
    }
    CHECK(tested == 20);
}

TEST_CASE("power iteration is deterministic in the seed") {
    gnd::Rng rng(555);
    const auto g = testsupport::random_connected(50, 0.25, rng);
    WeightedLaplacianOperator op(g, degree_weights_of(g), true);
    SpectralConfig cfg;
    cfg.rng_seed = 7;
    const auto a = gnd::power_iteration(op, cfg);
    const auto b = gnd::power_iteration(op, cfg);
    CHECK(a.v == b.v);
    CHECK(a.rayleigh == b.rayleigh);
    CHECK(a.iterations_used == b.iterations_used);
    cfg.rng_seed = 8;
    const auto c = gnd::power_iteration(op, cfg);
    CHECK(a.v != c.v);
}
