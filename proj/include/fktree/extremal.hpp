#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fktree/tree.hpp"

namespace fktree {

/// A tree class from one of the studied families. n is the total vertex
/// count, k the interior count, d a lower bound on interior degrees.
struct ClassSpec {
    enum class Kind {
        Tnk,          // trees with |V| = n, |V0| = k
        Tdnk,         // Tnk restricted to interior degrees >= d
        Tpi,          // fixed degree sequence
        TnAny,        // |V| = n, any interior count
        TdnAny,       // TnAny with interior degrees >= d
        TAnyK,        // |V0| = k, any vertex count (enumerated up to a cap)
        TdAnyK,       // TAnyK with interior degrees >= d
        SemiRegular,  // all interior degrees exactly d, |V| = n
    };

    Kind kind = Kind::Tnk;
    int n = -1;
    int k = -1;
    int d = -1;
    std::optional<DegreeSequence> pi;

    static ClassSpec tnk(int n, int k) { return {Kind::Tnk, n, k, -1, std::nullopt}; }
    static ClassSpec tdnk(int n, int k, int d) { return {Kind::Tdnk, n, k, d, std::nullopt}; }
    static ClassSpec tpi(DegreeSequence pi) {
        return {Kind::Tpi, pi.total(), pi.interior_count(), -1, std::move(pi)};
    }
    static ClassSpec tn_any(int n) { return {Kind::TnAny, n, -1, -1, std::nullopt}; }
    static ClassSpec tdn_any(int n, int d) { return {Kind::TdnAny, n, -1, d, std::nullopt}; }
    static ClassSpec tany_k(int k) { return {Kind::TAnyK, -1, k, -1, std::nullopt}; }
    static ClassSpec tdany_k(int k, int d) { return {Kind::TdAnyK, -1, k, d, std::nullopt}; }
    static ClassSpec semi_regular(int d, int n) {
        return {Kind::SemiRegular, n, -1, d, std::nullopt};
    }

    std::string to_string() const;
};

struct SloStarTree {
    TreeWithBoundary tree;
    VertexOrdering ordering;
};

/// The unique SLO*-tree of the class T_pi, built by the inductive
/// construction: split off the largest interior degree, build the smaller
/// SLO*-tree, then grow it back at its first boundary-adjacent vertex.
/// Vertices are labeled by their rank, so the returned ordering is the
/// identity permutation.
SloStarTree build_slo_star_tree(const DegreeSequence& pi);

/// Layered tree where the rank-i vertex has degree degree_by_rank[i] and
/// children occupy consecutive ranks (rank 0 is the root). Requires the
/// degrees to sum to 2(n-1) with trailing 1s for the boundary ranks.
TreeWithBoundary build_layered_tree(const std::vector<int>& degree_by_rank);

/// Minimizer of T^(n,k): a path of k interior vertices with one boundary
/// vertex at the tail and the n-k-1 remaining boundary vertices at the head.
TreeWithBoundary build_comet(int n, int k);

/// Minimizer of T_d^(n,k): the SLO*-tree where one interior vertex has
/// degree dcirc = d + sum(d_v - d) and all others have degree d.
TreeWithBoundary build_Td_minimizer(int n, int k, int d);

/// Minimizers of the four relaxed classes: a path on n vertices for TnAny,
/// a path on k+2 vertices for TAnyK, and the SLO*-trees with one interior
/// degree in [d, 2d) (TdnAny) or all interior degrees d (TdAnyK).
TreeWithBoundary build_relaxed_minimizer(const ClassSpec& spec);

/// d + sum over interior degrees of (d_v - d). Throws if some interior
/// degree is below d.
int predicted_dcirc(const DegreeSequence& pi, int d);

TreeWithBoundary build_path_tree(int n);

}  // namespace fktree
