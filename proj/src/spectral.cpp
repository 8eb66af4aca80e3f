#include "fktree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fktree {

namespace {

constexpr int kDenseLimit = 64;
constexpr int kMaxIterations = 10000;

double matrix_scale(const Eigen::MatrixXd& m) {
    return std::max(1.0, m.cwiseAbs().rowwise().sum().maxCoeff());
}

// Shifted inverse iteration on an SPD matrix: smallest eigenpair via
// LLT solves, second eigenvalue via deflation against the first vector.
void iterative_two_smallest(const Eigen::MatrixXd& a, double tol, double& lambda1,
                            Eigen::VectorXd& v1, double& lambda2) {
    const int k = static_cast<int>(a.rows());
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("Dirichlet matrix is not positive definite");

    const double scale = matrix_scale(a);
    auto converge = [&](Eigen::VectorXd& v, bool deflate) {
        double lambda = 0.0;
        for (int it = 0; it < kMaxIterations; ++it) {
            Eigen::VectorXd y = llt.solve(v);
            if (deflate) y -= v1.dot(y) * v1;
            double norm = y.norm();
            if (norm == 0.0) throw std::runtime_error("inverse iteration collapsed");
            y /= norm;
            lambda = y.dot(a * y);
            Eigen::VectorXd r = a * y - lambda * y;
            if (deflate) r -= v1.dot(r) * v1;
            v = y;
            if (r.norm() <= tol * scale) return lambda;
        }
        throw std::runtime_error("eigenvalue iteration did not converge within " +
                                 std::to_string(kMaxIterations) + " steps");
    };

    Eigen::VectorXd x = Eigen::VectorXd::Ones(k);
    x(0) += 0.5;  // break symmetry
    x.normalize();
    lambda1 = converge(x, false);
    v1 = x;

    Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
    y(k - 1) = 1.0;
    y -= v1.dot(y) * v1;
    if (y.norm() < 1e-8) {
        y = Eigen::VectorXd::Random(k);
        y -= v1.dot(y) * v1;
    }
    y.normalize();
    lambda2 = converge(y, true);
}

}  // namespace

Eigen::MatrixXd laplacian(const TreeWithBoundary& t) {
    const int n = t.vertex_count();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) m(v, v) = t.degree(v);
    for (const auto& [u, v] : t.edges()) {
        m(u, v) = -1.0;
        m(v, u) = -1.0;
    }
    return m;
}

DirichletMatrix dirichlet_matrix(const TreeWithBoundary& t) {
    DirichletMatrix dm;
    dm.k = t.interior_count();
    dm.vertex_of_row = t.interior();
    dm.row_of_vertex.assign(t.vertex_count(), -1);
    for (int i = 0; i < dm.k; ++i) dm.row_of_vertex[dm.vertex_of_row[i]] = i;
    dm.entries = Eigen::MatrixXd::Zero(dm.k, dm.k);
    for (int i = 0; i < dm.k; ++i) {
        int v = dm.vertex_of_row[i];
        dm.entries(i, i) = t.degree(v);  // whole-graph degree, boundary edges included
        for (int w : t.neighbors(v)) {
            int j = dm.row_of_vertex[w];
            if (j >= 0) dm.entries(i, j) = -1.0;
        }
    }
    return dm;
}

DirichletEigenpair first_eigenpair(const TreeWithBoundary& t, double tol,
                                   EigenSolverKind solver) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    DirichletMatrix dm = dirichlet_matrix(t);
    const int k = dm.k;

    DirichletEigenpair pair;
    pair.f.assign(t.vertex_count(), 0.0);

    Eigen::VectorXd vec(k);
    if (k == 1) {
        // 1x1 matrix: read the eigenpair off directly.
        pair.lambda = dm.entries(0, 0);
        pair.gap = std::numeric_limits<double>::infinity();
        vec(0) = 1.0;
    } else {
        bool dense = solver == EigenSolverKind::Dense ||
                     (solver == EigenSolverKind::Auto && k <= kDenseLimit);
        double lambda2 = 0.0;
        if (dense) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dm.entries);
            if (es.info() != Eigen::Success)
                throw std::runtime_error("dense eigensolver failed to converge");
            pair.lambda = es.eigenvalues()(0);
            lambda2 = es.eigenvalues()(1);
            vec = es.eigenvectors().col(0);
        } else {
            iterative_two_smallest(dm.entries, tol, pair.lambda, vec, lambda2);
        }
        pair.gap = lambda2 - pair.lambda;
        if (pair.gap <= 1e-10 * matrix_scale(dm.entries))
            throw std::runtime_error("first Dirichlet eigenvalue is not cleanly simple");
    }

    vec.normalize();
    if (vec.sum() < 0.0) vec = -vec;
    for (int i = 0; i < k; ++i) {
        if (vec(i) <= 0.0)
            throw std::runtime_error("first eigenfunction is not strictly positive on interior");
        pair.f[dm.vertex_of_row[i]] = vec(i);
    }

    pair.residual = (dm.entries * vec - pair.lambda * vec).norm();
    if (pair.residual > tol * matrix_scale(dm.entries))
        throw std::runtime_error("eigenpair residual exceeds tolerance");
    if (pair.lambda <= 0.0)
        throw std::runtime_error("first Dirichlet eigenvalue is not positive");
    return pair;
}

double rayleigh_quotient(const TreeWithBoundary& t, const std::vector<double>& f) {
    if (static_cast<int>(f.size()) != t.vertex_count())
        throw std::invalid_argument("function size does not match vertex count");
    double num = 0.0, den = 0.0;
    for (const auto& [u, v] : t.edges()) {
        double d = f[u] - f[v];
        num += d * d;
    }
    for (double x : f) den += x * x;
    if (den == 0.0) throw std::invalid_argument("Rayleigh quotient of the zero function");
    return num / den;
}

double boundary_weight_identity_residual(const TreeWithBoundary& t,
                                         const DirichletEigenpair& pair) {
    double weighted = 0.0, plain = 0.0;
    for (int v : t.interior()) {
        int b = 0;
        for (int w : t.neighbors(v))
            if (t.is_boundary(w)) ++b;
        weighted += b * pair.f[v];
        plain += pair.f[v];
    }
    return std::abs(pair.lambda - weighted / plain);
}

bool check_monotonicity(const TreeWithBoundary& t_small, const TreeWithBoundary& t_large,
                        const std::vector<int>& embedding) {
    const int ns = t_small.vertex_count();
    const int nl = t_large.vertex_count();
    if (static_cast<int>(embedding.size()) != ns)
        throw std::invalid_argument("embedding size does not match t_small");
    std::vector<bool> hit(nl, false);
    for (int v = 0; v < ns; ++v) {
        int image = embedding[v];
        if (image < 0 || image >= nl) throw std::invalid_argument("embedding image out of range");
        if (hit[image]) throw std::invalid_argument("embedding is not injective");
        hit[image] = true;
    }
    for (const auto& [u, v] : t_small.edges())
        if (!t_large.has_edge(embedding[u], embedding[v]))
            throw std::invalid_argument("embedding does not map edges to edges");
    for (int v : t_small.interior())
        if (t_small.degree(v) != t_large.degree(embedding[v]))
            throw std::invalid_argument(
                "embedding changes the degree of interior vertex " + std::to_string(v));
    if (ns == nl) return false;  // not a proper subgraph

    double lambda_small = first_eigenpair(t_small).lambda;
    double lambda_large = first_eigenpair(t_large).lambda;
    return lambda_small > lambda_large;
}

}  // namespace fktree
