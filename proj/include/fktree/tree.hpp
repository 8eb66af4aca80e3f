#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fktree {

/// Undirected tree whose degree-1 vertices form the boundary and all other
/// vertices the interior. Both parts must be nonempty, so the smallest valid
/// instance is the path on 3 vertices. Vertex ids are dense 0..n-1.
/// Immutable after construction; all free functions below are pure.
class TreeWithBoundary {
public:
    TreeWithBoundary(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int interior_count() const { return static_cast<int>(interior_.size()); }
    int boundary_count() const { return static_cast<int>(boundary_.size()); }

    /// Edges normalized to (min,max) and sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool is_interior(int v) const { return degree(v) >= 2; }
    bool is_boundary(int v) const { return degree(v) == 1; }
    const std::vector<int>& interior() const { return interior_; }
    const std::vector<int>& boundary() const { return boundary_; }
    bool has_edge(int u, int v) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> interior_;
    std::vector<int> boundary_;
};

/// Multiset of vertex degrees split into the interior part (each entry >= 2,
/// kept sorted non-decreasingly) and the count of boundary 1-entries.
class DegreeSequence {
public:
    DegreeSequence(std::vector<int> interior_degrees, int boundary_count);

    /// Parses one line of space- or comma-separated positive integers with
    /// the boundary 1s written out explicitly, e.g. "2 2 3 1 1 1".
    static DegreeSequence parse(const std::string& text);

    const std::vector<int>& interior() const { return interior_; }
    int interior_count() const { return static_cast<int>(interior_.size()); }
    int boundary_count() const { return boundary_; }
    int total() const { return interior_count() + boundary_; }
    int degree_sum() const;

    /// Full sequence: interior degrees followed by the boundary 1s.
    std::vector<int> padded() const;
    std::string to_string() const;

    bool operator==(const DegreeSequence& other) const {
        return interior_ == other.interior_ && boundary_ == other.boundary_;
    }
    bool operator!=(const DegreeSequence& other) const { return !(*this == other); }

private:
    std::vector<int> interior_;
    int boundary_;
};

/// Total order of all vertices; position in `order` is the rank and the
/// first vertex acts as the root for height-based checks.
struct VertexOrdering {
    std::vector<int> order;
    int root() const { return order.front(); }
};

/// Parent/height/children maps obtained by breadth-first traversal from a
/// root. Children lists are sorted by (degree, canonical subtree code, id)
/// so traversals are deterministic.
struct RootedView {
    int root = -1;
    std::vector<int> parent;                  // -1 at the root
    std::vector<int> height;
    std::vector<std::vector<int>> children;
    std::vector<std::string> subtree_code;    // canonical code of the subtree below v
};

struct AxiomViolation {
    std::string axiom;  // "S1".."S4"
    int v = -1;
    int w = -1;
};

struct SloCheck {
    bool valid_slo = false;
    bool valid_slo_star = false;
    std::vector<AxiomViolation> violations;
};

struct BallCheck {
    bool is_ball = false;
    std::optional<int> radius;
};

/// Reads the tree file format: first line `n`, then n-1 lines `u v`;
/// `#` starts a comment. Throws std::invalid_argument on malformed input,
/// duplicate edges, cyclic/disconnected edge sets, or missing interior.
TreeWithBoundary parse_tree(const std::string& text);

/// Inverse of parse_tree; optionally appends a `# order: ...` annotation.
std::string format_tree(const TreeWithBoundary& t, const VertexOrdering* ordering = nullptr);

DegreeSequence degree_sequence_of(const TreeWithBoundary& t);

/// Harary's criterion: all entries positive (by construction here) and the
/// degree sum equal to 2(n-1).
bool is_tree_sequence(const DegreeSequence& s);

RootedView rooted_view(const TreeWithBoundary& t, int root);

/// Evaluates the spiral-like-ordering axioms (S1)-(S3) and, for the starred
/// variant, (S4): interior degrees non-decreasing along the order. (S2) is
/// vacuous for childless vertices. Each failed axiom is reported with one
/// witness pair.
SloCheck check_slo(const TreeWithBoundary& t, const VertexOrdering& o);

/// Membership test by construct-and-compare against the unique SLO*-tree of
/// the same degree sequence.
bool is_slo_star_tree(const TreeWithBoundary& t);

/// Canonical code: equal iff the trees are isomorphic. Computed by rooting
/// at the tree center (smaller code of the two for bicentral trees) and
/// encoding subtrees recursively with sorted child codes.
std::string canonical_form(const TreeWithBoundary& t);

/// Canonical code of t rooted at a designated vertex.
std::string rooted_code(const TreeWithBoundary& t, int root);

bool isomorphic(const TreeWithBoundary& a, const TreeWithBoundary& b);

/// True iff all boundary vertices lie at one common distance from `center`.
BallCheck is_ball(const TreeWithBoundary& t, int center);

/// Unique path between two vertices, endpoints included.
std::vector<int> geodesic_path(const TreeWithBoundary& t, int a, int b);

/// The 1- or 2-element center of the tree (leaf-peeling).
std::vector<int> tree_center(const TreeWithBoundary& t);

}  // namespace fktree
