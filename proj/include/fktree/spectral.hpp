#pragma once

#include <Eigen/Dense>

#include <vector>

#include "fktree/tree.hpp"

namespace fktree {

/// Principal submatrix of the Laplacian on the interior vertices. The
/// diagonal carries whole-graph degrees, so boundary edges still contribute.
/// Symmetric positive definite for every tree with nonempty boundary.
struct DirichletMatrix {
    int k = 0;
    Eigen::MatrixXd entries;
    std::vector<int> vertex_of_row;  // row index -> interior vertex id
    std::vector<int> row_of_vertex;  // vertex id -> row index, -1 on boundary
};

/// First Dirichlet eigenpair. f spans all n vertices, is exactly zero on the
/// boundary, strictly positive on the interior, and has unit 2-norm over the
/// interior. gap = lambda_2 - lambda (infinity when k == 1).
struct DirichletEigenpair {
    double lambda = 0.0;
    double gap = 0.0;
    double residual = 0.0;
    std::vector<double> f;
};

enum class EigenSolverKind {
    Auto,       // dense for k <= 64, shifted inverse iteration above
    Dense,
    Iterative,
};

/// D - A over all n vertices.
Eigen::MatrixXd laplacian(const TreeWithBoundary& t);

DirichletMatrix dirichlet_matrix(const TreeWithBoundary& t);

DirichletEigenpair first_eigenpair(const TreeWithBoundary& t, double tol = 1e-12,
                                   EigenSolverKind solver = EigenSolverKind::Auto);

/// Sum over all edges of (f(u)-f(v))^2 divided by the squared norm of f.
/// Throws on an identically-zero f.
double rayleigh_quotient(const TreeWithBoundary& t, const std::vector<double>& f);

/// |lambda - sum_v b_v f(v) / sum_v f(v)| where b_v counts the boundary
/// neighbors of v. Both sums effectively run over the interior only since f
/// vanishes on the boundary and boundary vertices have no boundary neighbor.
double boundary_weight_identity_residual(const TreeWithBoundary& t,
                                         const DirichletEigenpair& pair);

/// Domain monotonicity check. `embedding` maps each vertex of t_small
/// injectively to a vertex of t_large such that edges map to edges and every
/// interior vertex of t_small keeps its full degree (i.e. t_small is a
/// cut-out of t_large). Returns false for a non-proper (surjective)
/// embedding, otherwise whether lambda(t_small) > lambda(t_large).
/// Throws if the embedding is invalid.
bool check_monotonicity(const TreeWithBoundary& t_small, const TreeWithBoundary& t_large,
                        const std::vector<int>& embedding);

}  // namespace fktree
