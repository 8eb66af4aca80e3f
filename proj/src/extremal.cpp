#include "fktree/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fktree {

std::string ClassSpec::to_string() const {
    switch (kind) {
        case Kind::Tnk: return "T(" + std::to_string(n) + "," + std::to_string(k) + ")";
        case Kind::Tdnk:
            return "T_" + std::to_string(d) + "(" + std::to_string(n) + "," + std::to_string(k) +
                   ")";
        case Kind::Tpi: return "T_pi(" + pi->to_string() + ")";
        case Kind::TnAny: return "T(" + std::to_string(n) + ",.)";
        case Kind::TdnAny: return "T_" + std::to_string(d) + "(" + std::to_string(n) + ",.)";
        case Kind::TAnyK: return "T(.," + std::to_string(k) + ")";
        case Kind::TdAnyK: return "T_" + std::to_string(d) + "(.," + std::to_string(k) + ")";
        case Kind::SemiRegular:
            return "semi-regular(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")";
    }
    return "?";
}

namespace {

// Tree labeled in SLO* rank order: interior ranks 0..k-1, boundary after.
struct RankedTree {
    int n = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;
};

// Inductive construction over the sorted interior degree list. The returned
// labeling is the SLO*-ordering itself.
RankedTree build_ranked(const std::vector<int>& interior, int boundary) {
    const int k = static_cast<int>(interior.size());
    RankedTree t;
    t.k = k;
    t.n = k + boundary;
    if (k == 1) {
        // Base case: a star (covers the path of length 2 for degree 2).
        if (interior[0] != boundary)
            throw std::logic_error("star base case requires degree == boundary count");
        for (int i = 1; i <= boundary; ++i) t.edges.emplace_back(0, i);
        return t;
    }

    const int dmax = interior[k - 1];
    const int sub_boundary = boundary - dmax + 2;  // drop dmax-1 ones, add one back
    if (sub_boundary < 1) throw std::logic_error("degree sequence recursion underflow");
    std::vector<int> sub_interior(interior.begin(), interior.end() - 1);
    RankedTree sub = build_ranked(sub_interior, sub_boundary);

    std::vector<std::vector<int>> adj(sub.n);
    for (const auto& [u, v] : sub.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    const int sub_k = k - 1;
    int attach = -1, replaced = -1;
    for (int v = 0; v < sub.n && attach < 0; ++v) {
        for (int w : adj[v]) {
            if (w >= sub_k) {  // first rank with a boundary neighbor, smallest such neighbor
                if (replaced < 0 || w < replaced) replaced = w;
                attach = v;
            }
        }
    }
    if (attach < 0) throw std::logic_error("no boundary-adjacent vertex in SLO*-subtree");

    // Relabel: interiors keep their rank, `replaced` becomes the new last
    // interior (rank k-1), remaining boundary shifts up by one, and the
    // fresh boundary vertices take the final ranks.
    auto relabel = [&](int v) {
        if (v < sub_k) return v;
        if (v == replaced) return k - 1;
        return v < replaced ? v + 1 : v;
    };
    for (const auto& [u, v] : sub.edges) t.edges.emplace_back(relabel(u), relabel(v));
    for (int i = 0; i < dmax - 1; ++i) t.edges.emplace_back(k - 1, sub.n + i);
    return t;
}

}  // namespace

SloStarTree build_slo_star_tree(const DegreeSequence& pi) {
    if (!is_tree_sequence(pi))
        throw std::invalid_argument("not a tree sequence: " + pi.to_string());
    RankedTree ranked = build_ranked(pi.interior(), pi.boundary_count());
    TreeWithBoundary tree(ranked.n, std::move(ranked.edges));
    VertexOrdering ordering;
    ordering.order.resize(ranked.n);
    std::iota(ordering.order.begin(), ordering.order.end(), 0);
    return {std::move(tree), std::move(ordering)};
}

TreeWithBoundary build_layered_tree(const std::vector<int>& degree_by_rank) {
    const int n = static_cast<int>(degree_by_rank.size());
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int p = 0; p < n && next < n; ++p) {
        int cap = degree_by_rank[p] - (p > 0 ? 1 : 0);
        for (int i = 0; i < cap; ++i) {
            if (next >= n) throw std::invalid_argument("degree ranks exceed vertex budget");
            edges.emplace_back(p, next++);
        }
    }
    if (next != n) throw std::invalid_argument("degree ranks do not cover all vertices");
    return TreeWithBoundary(n, std::move(edges));
}

bool is_slo_star_tree(const TreeWithBoundary& t) {
    SloStarTree reference = build_slo_star_tree(degree_sequence_of(t));
    return canonical_form(t) == canonical_form(reference.tree);
}

TreeWithBoundary build_comet(int n, int k) {
    if (k < 1 || k > n - 2)
        throw std::invalid_argument("comet requires 1 <= k <= n-2, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);  // tail boundary 0, path 1..k
    for (int leaf = k + 1; leaf < n; ++leaf) edges.emplace_back(k, leaf);
    return TreeWithBoundary(n, std::move(edges));
}

TreeWithBoundary build_Td_minimizer(int n, int k, int d) {
    if (d < 2) throw std::invalid_argument("interior degree bound must be at least 2");
    if (k < 1 || k > n - 2) throw std::invalid_argument("infeasible (n,k)");
    // Interior degrees sum to 2(n-1) - (n-k): each of the n-k boundary
    // vertices contributes one edge endpoint of weight 1.
    const int interior_sum = n + k - 2;
    const int dcirc = interior_sum - (k - 1) * d;
    if (dcirc < d)
        throw std::invalid_argument("class T_" + std::to_string(d) + "(" + std::to_string(n) +
                                    "," + std::to_string(k) + ") is empty: dcirc < d");
    std::vector<int> interior(k - 1, d);
    interior.push_back(dcirc);
    return build_slo_star_tree(DegreeSequence(std::move(interior), n - k)).tree;
}

TreeWithBoundary build_path_tree(int n) {
    if (n < 3) throw std::invalid_argument("a path with boundary needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return TreeWithBoundary(n, std::move(edges));
}

TreeWithBoundary build_relaxed_minimizer(const ClassSpec& spec) {
    switch (spec.kind) {
        case ClassSpec::Kind::TnAny:
            return build_path_tree(spec.n);
        case ClassSpec::Kind::TAnyK:
            return build_path_tree(spec.k + 2);
        case ClassSpec::Kind::TdnAny: {
            if (spec.d < 2) throw std::invalid_argument("degree bound must be at least 2");
            if (spec.n < spec.d + 1)
                throw std::invalid_argument("class " + spec.to_string() +
                                            " is empty: n < d + 1");
            // Greatest interior count with one degree dcirc in [d, 2d):
            // k = floor((n-2)/(d-1)) leaves dcirc = d + (n-2) mod (d-1).
            const int k = (spec.n - 2) / (spec.d - 1);
            const int dcirc = spec.n + k - 2 - (k - 1) * spec.d;
            if (dcirc < spec.d || dcirc >= 2 * spec.d)
                throw std::invalid_argument("no interior count fits dcirc in [d,2d) for " +
                                            spec.to_string());
            return build_Td_minimizer(spec.n, k, spec.d);
        }
        case ClassSpec::Kind::TdAnyK: {
            if (spec.d < 2) throw std::invalid_argument("degree bound must be at least 2");
            if (spec.k < 1) throw std::invalid_argument("interior count must be positive");
            const int n = spec.k * (spec.d - 1) + 2;  // forced by the degree-sum identity
            std::vector<int> interior(spec.k, spec.d);
            return build_slo_star_tree(DegreeSequence(std::move(interior), n - spec.k)).tree;
        }
        default:
            throw std::invalid_argument("build_relaxed_minimizer expects a relaxed class kind");
    }
}

int predicted_dcirc(const DegreeSequence& pi, int d) {
    int dcirc = d;
    for (int dv : pi.interior()) {
        if (dv < d)
            throw std::invalid_argument("interior degree " + std::to_string(dv) +
                                        " is below the bound d=" + std::to_string(d));
        dcirc += dv - d;
    }
    return dcirc;
}

}  // namespace fktree
