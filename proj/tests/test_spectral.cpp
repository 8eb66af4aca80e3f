#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fktree/enumerate.hpp"
#include "fktree/extremal.hpp"
#include "fktree/spectral.hpp"
#include "fktree/tree.hpp"
#include "support/oracles.hpp"

using namespace fktree;
namespace oracle = fktree::testing;

namespace {

// Proper cut-out of t: a connected interior subset keeps its full degrees,
// its frontier becomes the boundary. Returns (subtree, embedding).
std::pair<TreeWithBoundary, std::vector<int>> random_cutout(const TreeWithBoundary& t,
                                                            std::mt19937_64& rng) {
    const auto& interior = t.interior();
    int target = 1 + static_cast<int>(rng() % (interior.size() > 1 ? interior.size() - 1 : 1));
    std::vector<int> chosen{interior[rng() % interior.size()]};
    std::vector<bool> in_set(t.vertex_count(), false);
    in_set[chosen[0]] = true;
    while (static_cast<int>(chosen.size()) < target) {
        std::vector<int> frontier;
        for (int v : chosen)
            for (int w : t.neighbors(v))
                if (!in_set[w] && t.is_interior(w)) frontier.push_back(w);
        if (frontier.empty()) break;
        int pick = frontier[rng() % frontier.size()];
        in_set[pick] = true;
        chosen.push_back(pick);
    }
    std::vector<int> small_to_large;
    std::vector<int> large_to_small(t.vertex_count(), -1);
    auto small_id = [&](int v) {
        if (large_to_small[v] < 0) {
            large_to_small[v] = static_cast<int>(small_to_large.size());
            small_to_large.push_back(v);
        }
        return large_to_small[v];
    };
    std::vector<std::pair<int, int>> edges;
    for (int v : chosen)
        for (int w : t.neighbors(v)) {
            if (in_set[w] && w < v) continue;  // edge within the set, added once
            edges.emplace_back(small_id(v), small_id(w));
        }
    TreeWithBoundary small(static_cast<int>(small_to_large.size()), std::move(edges));
    return {std::move(small), std::move(small_to_large)};
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("laplacian of small trees") {
    Eigen::MatrixXd p3 = laplacian(parse_tree("3\n0 1\n1 2\n"));
    Eigen::MatrixXd expected(3, 3);
    expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    CHECK((p3 - expected).cwiseAbs().maxCoeff() == 0.0);

    Eigen::MatrixXd star = laplacian(parse_tree("4\n0 1\n0 2\n0 3\n"));
    CHECK(star(0, 0) == 3.0);
    for (int i = 1; i < 4; ++i) {
        CHECK(star(i, i) == 1.0);
        CHECK(star(0, i) == -1.0);
    }
}

TEST_CASE("laplacian row sums vanish") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        TreeWithBoundary t = oracle::random_labeled_tree(3 + static_cast<int>(rng() % 10), rng);
        Eigen::VectorXd sums = laplacian(t).rowwise().sum();
        CHECK(sums.cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("dirichlet_matrix keeps whole-graph degrees on the diagonal") {
    DirichletMatrix p3 = dirichlet_matrix(parse_tree("3\n0 1\n1 2\n"));
    CHECK(p3.k == 1);
    CHECK(p3.entries(0, 0) == 2.0);

    DirichletMatrix p4 = dirichlet_matrix(parse_tree("4\n0 1\n1 2\n2 3\n"));
    CHECK(p4.k == 2);
    CHECK(p4.entries(0, 0) == 2.0);
    CHECK(p4.entries(0, 1) == -1.0);
    CHECK(p4.entries(1, 0) == -1.0);
    CHECK(p4.entries(1, 1) == 2.0);

    for (int k = 2; k <= 6; ++k) {
        DirichletMatrix star = dirichlet_matrix(build_comet(k + 1, 1));
        CHECK(star.k == 1);
        CHECK(star.entries(0, 0) == static_cast<double>(k));
    }
}

TEST_CASE("first_eigenpair on analytically solvable trees") {
    DirichletEigenpair p3 = first_eigenpair(parse_tree("3\n0 1\n1 2\n"));
    CHECK(p3.lambda == 2.0);
    CHECK(std::isinf(p3.gap));
    CHECK(p3.f[1] == 1.0);
    CHECK(p3.f[0] == 0.0);

    DirichletEigenpair p4 = first_eigenpair(parse_tree("4\n0 1\n1 2\n2 3\n"));
    CHECK(p4.lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p4.gap == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p4.f[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(p4.f[2] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    DirichletEigenpair p5 = first_eigenpair(parse_tree("5\n0 1\n1 2\n2 3\n3 4\n"));
    CHECK(p5.lambda == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(p5.gap == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("first_eigenpair matches the Sturm-bisection oracle on every small tree") {
    for (int n = 3; n <= 10; ++n)  // covers every interior size up to 8
        for (const DegreeSequence& pi : tree_sequences_with_total(n))
            for (const TreeWithBoundary& t : enumerate_trees(pi)) {
                DirichletEigenpair pair = first_eigenpair(t);
                oracle::OracleEigenpair ref = oracle::oracle_first_eigenpair(t);
                CHECK(std::abs(pair.lambda - ref.lambda1) <= 1e-10);
                if (t.interior_count() > 1)
                    CHECK(std::abs(pair.gap - (ref.lambda2 - ref.lambda1)) <= 1e-9);
                for (int v = 0; v < t.vertex_count(); ++v)
                    CHECK(std::abs(pair.f[v] - ref.f[v]) <= 1e-8);
                CHECK(pair.lambda > 0.0);
                CHECK(pair.gap > 0.0);
                CHECK(pair.residual <= 1e-12 * 2 * t.vertex_count());
                for (int v : t.interior()) CHECK(pair.f[v] > 0.0);
                for (int v : t.boundary()) CHECK(pair.f[v] == 0.0);
            }
}

TEST_CASE("iterative solver path agrees with the dense one") {
    TreeWithBoundary p100 = build_path_tree(100);  // 98 interior forces iteration on Auto
    DirichletEigenpair it = first_eigenpair(p100, 1e-12, EigenSolverKind::Auto);
    double analytic = 2.0 - 2.0 * std::cos(M_PI / 99.0);
    CHECK(it.lambda == doctest::Approx(analytic).epsilon(1e-10));

    TreeWithBoundary comet = build_comet(150, 70);
    DirichletEigenpair a = first_eigenpair(comet, 1e-12, EigenSolverKind::Iterative);
    DirichletEigenpair b = first_eigenpair(comet, 1e-12, EigenSolverKind::Dense);
    CHECK(std::abs(a.lambda - b.lambda) <= 1e-10);
    CHECK(std::abs(a.gap - b.gap) <= 1e-8);
}

TEST_CASE("rayleigh_quotient") {
    TreeWithBoundary p3 = parse_tree("3\n0 1\n1 2\n");
    CHECK(rayleigh_quotient(p3, {0, 1, 0}) == 2.0);

    TreeWithBoundary p4 = parse_tree("4\n0 1\n1 2\n2 3\n");
    CHECK(rayleigh_quotient(p4, {0, 1, 1, 0}) == 1.0);

    DirichletEigenpair pair = first_eigenpair(p4);
    CHECK(rayleigh_quotient(p4, pair.f) == doctest::Approx(pair.lambda).epsilon(1e-12));

    CHECK_THROWS_AS(rayleigh_quotient(p4, {0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(rayleigh_quotient(p4, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("min-max: random boundary-vanishing functions never beat lambda") {
    std::mt19937_64 rng(99);
    for (int n = 4; n <= 9; ++n) {
        TreeWithBoundary t = oracle::random_labeled_tree(n, rng);
        DirichletEigenpair pair = first_eigenpair(t);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> f = oracle::random_boundary_vanishing(t, rng);
            CHECK(rayleigh_quotient(t, f) >= pair.lambda - 1e-12);
        }
        // Equality within tolerance forces an eigenfunction: a perturbation
        // orthogonal-ish to f must push the quotient strictly up.
        std::vector<double> g = pair.f;
        int v0 = t.interior().front();
        g[v0] += 1e-3;
        CHECK(rayleigh_quotient(t, g) > pair.lambda);
    }
}

TEST_CASE("boundary weight identity") {
    for (int leaves = 2; leaves <= 6; ++leaves) {
        TreeWithBoundary star = build_comet(leaves + 1, 1);
        DirichletEigenpair pair = first_eigenpair(star);
        CHECK(boundary_weight_identity_residual(star, pair) <= 1e-12);
    }
    TreeWithBoundary p4 = parse_tree("4\n0 1\n1 2\n2 3\n");
    CHECK(boundary_weight_identity_residual(p4, first_eigenpair(p4)) <= 1e-12);

    TreeWithBoundary comet = oracle::fig_comet_14();
    CHECK(boundary_weight_identity_residual(comet, first_eigenpair(comet)) <= 1e-9);
}

TEST_CASE("monotonicity: P3 inside P5") {
    TreeWithBoundary p3 = parse_tree("3\n0 1\n1 2\n");
    TreeWithBoundary p5 = parse_tree("5\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(check_monotonicity(p3, p5, {1, 2, 3}));
}

TEST_CASE("monotonicity: radius-1 ball inside radius-2 ball") {
    // B(v,1) with 3 leaves inside B(v,2) built from the same center.
    TreeWithBoundary b1 = parse_tree("4\n0 1\n0 2\n0 3\n");
    TreeWithBoundary b2 = parse_tree("7\n0 1\n0 2\n0 3\n1 4\n2 5\n3 6\n");
    CHECK(check_monotonicity(b1, b2, {0, 1, 2, 3}));
}

TEST_CASE("monotonicity rejects identity and invalid embeddings") {
    TreeWithBoundary p4 = parse_tree("4\n0 1\n1 2\n2 3\n");
    CHECK_FALSE(check_monotonicity(p4, p4, {0, 1, 2, 3}));  // not proper
    TreeWithBoundary p5 = parse_tree("5\n0 1\n1 2\n2 3\n3 4\n");
    CHECK_THROWS_AS(check_monotonicity(p4, p5, {0, 0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_monotonicity(p4, p5, {0, 2, 1, 3}), std::invalid_argument);
    // Interior degree must be preserved: P3's center mapped onto P5's end
    // vertex keeps degree, but mapping it under a higher-degree image fails.
    TreeWithBoundary p3 = parse_tree("3\n0 1\n1 2\n");
    TreeWithBoundary star = parse_tree("4\n0 1\n0 2\n0 3\n");
    CHECK_THROWS_AS(check_monotonicity(p3, star, {1, 0, 2}), std::invalid_argument);
}

TEST_CASE("monotonicity holds strictly on random proper cut-outs") {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 100) {
        TreeWithBoundary large = oracle::random_labeled_tree(5 + static_cast<int>(rng() % 8), rng);
        auto [small, embedding] = random_cutout(large, rng);
        if (small.vertex_count() == large.vertex_count()) continue;
        CHECK(check_monotonicity(small, large, embedding));
        double ls = first_eigenpair(small).lambda;
        double ll = first_eigenpair(large).lambda;
        CHECK(ls - ll > 1e-12);
        ++done;
    }
}

}  // TEST_SUITE
