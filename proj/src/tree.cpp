#include "fktree/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fktree {

namespace {

// Disjoint-set over 0..n-1, used to reject cyclic/disconnected edge sets.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

TreeWithBoundary::TreeWithBoundary(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n_ < 2) throw std::invalid_argument("tree needs at least 2 vertices");
    if (static_cast<int>(edges.size()) != n_ - 1)
        throw std::invalid_argument("expected " + std::to_string(n_ - 1) + " edges, got " +
                                    std::to_string(edges.size()));
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("vertex id out of range in edge (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    UnionFind uf(n_);
    for (const auto& [u, v] : edges)
        if (!uf.unite(u, v)) throw std::invalid_argument("edge set contains a cycle");
    // n-1 edges and acyclic implies connected.

    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    for (int v = 0; v < n_; ++v)
        (degree(v) == 1 ? boundary_ : interior_).push_back(v);
    if (interior_.empty())
        throw std::invalid_argument("tree has no interior vertex (n=2 is rejected)");
    if (boundary_.empty()) throw std::invalid_argument("tree has no boundary vertex");
}

bool TreeWithBoundary::has_edge(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

DegreeSequence::DegreeSequence(std::vector<int> interior_degrees, int boundary_count)
    : interior_(std::move(interior_degrees)), boundary_(boundary_count) {
    if (interior_.empty()) throw std::invalid_argument("degree sequence needs an interior entry");
    if (boundary_ < 1) throw std::invalid_argument("degree sequence needs a boundary entry");
    for (int d : interior_)
        if (d < 2)
            throw std::invalid_argument("interior degree " + std::to_string(d) + " is below 2");
    std::sort(interior_.begin(), interior_.end());
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<int> interior;
    int boundary = 0;
    long long value;
    while (in >> value) {
        if (value <= 0) throw std::invalid_argument("degree entries must be positive");
        if (value == 1)
            ++boundary;
        else
            interior.push_back(static_cast<int>(value));
    }
    if (!in.eof()) throw std::invalid_argument("malformed degree sequence");
    if (interior.empty()) throw std::invalid_argument("degree sequence has no interior entry");
    if (boundary == 0) throw std::invalid_argument("degree sequence has no boundary 1s");
    return DegreeSequence(std::move(interior), boundary);
}

int DegreeSequence::degree_sum() const {
    int s = boundary_;
    for (int d : interior_) s += d;
    return s;
}

std::vector<int> DegreeSequence::padded() const {
    std::vector<int> all = interior_;
    all.insert(all.end(), boundary_, 1);
    return all;
}

std::string DegreeSequence::to_string() const {
    std::string s;
    for (int d : padded()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(d);
    }
    return s;
}

TreeWithBoundary parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) {
                n = -1;
                std::string rest;
                if (ls.clear(), ls >> rest)
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": expected vertex count");
                continue;  // blank/comment line before header
            }
            if (n < 2) throw std::invalid_argument("vertex count must be at least 2");
            std::string rest;
            if (ls >> rest)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": trailing tokens after vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u)) {
            ls.clear();
            std::string rest;
            if (ls >> rest)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": malformed edge");
            continue;  // blank line
        }
        if (!(ls >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed edge");
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": trailing tokens after edge");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("empty tree document");
    return TreeWithBoundary(n, std::move(edges));
}

std::string format_tree(const TreeWithBoundary& t, const VertexOrdering* ordering) {
    std::string out = std::to_string(t.vertex_count()) + "\n";
    if (ordering != nullptr) {
        out += "# order:";
        for (int v : ordering->order) out += ' ' + std::to_string(v);
        out += '\n';
    }
    for (const auto& [u, v] : t.edges())
        out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

DegreeSequence degree_sequence_of(const TreeWithBoundary& t) {
    std::vector<int> interior;
    interior.reserve(t.interior_count());
    for (int v : t.interior()) interior.push_back(t.degree(v));
    std::sort(interior.begin(), interior.end());
    return DegreeSequence(std::move(interior), t.boundary_count());
}

bool is_tree_sequence(const DegreeSequence& s) {
    return s.degree_sum() == 2 * (s.total() - 1);
}

namespace {

// Canonical code of the subtree hanging below v (away from parent):
// "(" + sorted child codes + ")".
std::string subtree_code_below(const TreeWithBoundary& t, int v, int parent) {
    std::vector<std::string> codes;
    for (int w : t.neighbors(v))
        if (w != parent) codes.push_back(subtree_code_below(t, w, v));
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (const auto& c : codes) out += c;
    out += ')';
    return out;
}

}  // namespace

RootedView rooted_view(const TreeWithBoundary& t, int root) {
    const int n = t.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    RootedView view;
    view.root = root;
    view.parent.assign(n, -1);
    view.height.assign(n, -1);
    view.children.assign(n, {});
    view.subtree_code.assign(n, {});

    std::queue<int> q;
    q.push(root);
    view.height[root] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v)) {
            if (view.height[w] >= 0) continue;
            view.height[w] = view.height[v] + 1;
            view.parent[w] = v;
            view.children[v].push_back(w);
            q.push(w);
        }
    }
    for (int v = 0; v < n; ++v) view.subtree_code[v] = subtree_code_below(t, v, view.parent[v]);
    for (int v = 0; v < n; ++v) {
        auto& ch = view.children[v];
        std::sort(ch.begin(), ch.end(), [&](int a, int b) {
            if (t.degree(a) != t.degree(b)) return t.degree(a) < t.degree(b);
            if (view.subtree_code[a] != view.subtree_code[b])
                return view.subtree_code[a] < view.subtree_code[b];
            return a < b;
        });
    }
    return view;
}

SloCheck check_slo(const TreeWithBoundary& t, const VertexOrdering& o) {
    const int n = t.vertex_count();
    if (static_cast<int>(o.order.size()) != n)
        throw std::invalid_argument("ordering size does not match vertex count");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = o.order[i];
        if (v < 0 || v >= n || pos[v] >= 0)
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        pos[v] = i;
    }

    RootedView view = rooted_view(t, o.root());
    SloCheck result;
    bool s1 = true, s2 = true, s3 = true, s4 = true;

    for (int i = 0; i + 1 < n && s1; ++i) {
        int v = o.order[i], w = o.order[i + 1];
        if (view.height[v] > view.height[w]) {
            s1 = false;
            result.violations.push_back({"S1", v, w});
        }
    }

    // (S2): child blocks of earlier parents must precede child blocks of
    // later parents. Checking consecutive parents (in order) suffices.
    {
        std::vector<int> parents_in_order;
        for (int i = 0; i < n; ++i)
            if (!view.children[o.order[i]].empty()) parents_in_order.push_back(o.order[i]);
        for (size_t i = 0; i + 1 < parents_in_order.size() && s2; ++i) {
            int p1 = parents_in_order[i], p2 = parents_in_order[i + 1];
            int max_child1 = -1, min_child2 = n;
            int wit1 = -1, wit2 = -1;
            for (int c : view.children[p1])
                if (pos[c] > max_child1) max_child1 = pos[c], wit1 = c;
            for (int c : view.children[p2])
                if (pos[c] < min_child2) min_child2 = pos[c], wit2 = c;
            if (max_child1 >= min_child2) {
                s2 = false;
                result.violations.push_back({"S2", wit1, wit2});
            }
        }
    }

    for (int i = 0; i + 1 < n && s3; ++i) {
        int v = o.order[i], w = o.order[i + 1];
        if (t.is_boundary(v) && t.is_interior(w)) {
            s3 = false;
            result.violations.push_back({"S3", v, w});
        }
    }

    {
        int prev = -1, prev_v = -1;
        for (int i = 0; i < n && s4; ++i) {
            int v = o.order[i];
            if (!t.is_interior(v)) continue;
            if (prev > t.degree(v)) {
                s4 = false;
                result.violations.push_back({"S4", prev_v, v});
            }
            prev = t.degree(v);
            prev_v = v;
        }
    }

    result.valid_slo = s1 && s2 && s3;
    result.valid_slo_star = result.valid_slo && s4;
    return result;
}

std::string rooted_code(const TreeWithBoundary& t, int root) {
    if (root < 0 || root >= t.vertex_count()) throw std::invalid_argument("root out of range");
    return subtree_code_below(t, root, -1);
}

std::vector<int> tree_center(const TreeWithBoundary& t) {
    const int n = t.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : t.neighbors(v))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> center;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) center.push_back(v);
    return center;
}

std::string canonical_form(const TreeWithBoundary& t) {
    auto center = tree_center(t);
    std::string best = rooted_code(t, center[0]);
    if (center.size() == 2) best = std::min(best, rooted_code(t, center[1]));
    return best;
}

bool isomorphic(const TreeWithBoundary& a, const TreeWithBoundary& b) {
    return canonical_form(a) == canonical_form(b);
}

BallCheck is_ball(const TreeWithBoundary& t, int center) {
    RootedView view = rooted_view(t, center);
    int r = -1;
    for (int v : t.boundary()) {
        if (r < 0) r = view.height[v];
        if (view.height[v] != r) return {false, std::nullopt};
    }
    return {true, r};
}

std::vector<int> geodesic_path(const TreeWithBoundary& t, int a, int b) {
    RootedView view = rooted_view(t, a);
    std::vector<int> path;
    for (int v = b; v != -1; v = view.parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;  // starts at a, ends at b
}

}  // namespace fktree
