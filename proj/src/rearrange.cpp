#include "fktree/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

#include "fktree/spectral.hpp"

namespace fktree {

namespace {

// Equal-value threshold for carried eigenfunction entries. The interior part
// of f has unit norm, so an absolute threshold is adequate.
constexpr double kEqualF = 1e-9;
// Slack for the non-increase assertion on Rayleigh values.
constexpr double kRayleighSlack = 1e-12;

bool f_equal(double a, double b) { return std::abs(a - b) <= kEqualF; }

std::vector<int> path_in_adj(const std::vector<std::set<int>>& adj, int a, int b) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> parent(n, -2);
    std::queue<int> q;
    q.push(a);
    parent[a] = -1;
    while (!q.empty() && parent[b] == -2) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

void validate_switch_on(const std::vector<std::set<int>>& adj, const SwitchMove& m) {
    if (!adj[m.v1].count(m.u1)) throw std::invalid_argument("switch: (v1,u1) is not an edge");
    if (!adj[m.v2].count(m.u2)) throw std::invalid_argument("switch: (v2,u2) is not an edge");
    std::vector<int> path = path_in_adj(adj, m.v1, m.v2);
    auto on_path = [&](int v) { return std::find(path.begin(), path.end(), v) != path.end(); };
    if (m.u2 == m.v1 || !on_path(m.u2))
        throw std::invalid_argument("switch: u2 must lie strictly on the geodesic path v1->v2");
    if (on_path(m.u1))
        throw std::invalid_argument("switch: u1 must not lie on the geodesic path v1->v2");
}

void validate_shift_on(const std::vector<std::set<int>>& adj, const ShiftMove& m) {
    if (!adj[m.u].count(m.v1)) throw std::invalid_argument("shift: (u,v1) is not an edge");
    if (m.v2 == m.v1) throw std::invalid_argument("shift: v2 must differ from v1");
    if (adj[m.v1].size() < 2)
        throw std::invalid_argument("shift: v1 would be stranded (degree below 1)");
    std::vector<int> path = path_in_adj(adj, m.v1, m.v2);
    if (std::find(path.begin(), path.end(), m.u) != path.end())
        throw std::invalid_argument("shift: u must not lie on the geodesic path v1->v2");
}

std::vector<std::set<int>> adjacency_of(const TreeWithBoundary& t) {
    std::vector<std::set<int>> adj(t.vertex_count());
    for (const auto& [u, v] : t.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

TreeWithBoundary tree_from_adj(int n, const std::vector<std::set<int>>& adj) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (v < w) edges.emplace_back(v, w);
    return TreeWithBoundary(n, std::move(edges));
}

// Runs the two constructive phases over a mutable adjacency, carrying the
// initial tree's eigenfunction and recording every slot in the trace.
class Rearranger {
public:
    explicit Rearranger(const TreeWithBoundary& t)
        : initial_(t),
          n_(t.vertex_count()),
          adj_(adjacency_of(t)),
          initial_degrees_(sorted_degrees()) {
        f_ = first_eigenpair(t).f;
        double den = 0.0;
        for (double x : f_) den += x * x;
        f_norm_sq_ = den;
        init_ordering();
        rayleigh_ = current_rayleigh();
        initial_rayleigh_ = rayleigh_;
    }

    // Ball growth by switching: after this, vertex ord_[i] is adjacent to its
    // designated parent for every i >= 1 and the ordering satisfies (S1)-(S3).
    void slo_phase() {
        int next = 1;
        for (int p_rank = 0; next < n_; ++p_rank) {
            if (p_rank >= n_) throw std::logic_error("slo phase ran out of parents");
            int p = ord_[p_rank];
            if (initial_.is_boundary(p))
                throw std::logic_error("slo phase reached a boundary parent");
            int cap = initial_.degree(p) - (p_rank > 0 ? 1 : 0);
            for (int slot = 0; slot < cap && next < n_; ++slot) {
                int r_rank = next++;
                attach(p, r_rank);
            }
        }
    }

    // Degree reassignment by shifting: excess children of rank r cascade to
    // rank r+1 until the degree at every rank matches target_by_rank.
    void shift_phase(const std::vector<int>& target_by_rank) {
        for (int r = 0; r < n_; ++r) {
            int v = ord_[r];
            int cur = static_cast<int>(adj_[v].size());
            int tgt = target_by_rank[r];
            if (cur < tgt)
                throw std::logic_error("shift phase: prefix-sum invariant violated at rank " +
                                       std::to_string(r));
            if (cur == tgt) continue;
            if (r + 1 >= n_) throw std::logic_error("shift phase: excess at the last rank");
            std::vector<int> children;
            for (int w : adj_[v])
                if (pos_[w] > r) children.push_back(w);
            std::sort(children.begin(), children.end(),
                      [&](int a, int b) { return pos_[a] < pos_[b]; });
            int keep = tgt - (r > 0 ? 1 : 0);
            if (keep < 0 || keep > static_cast<int>(children.size()))
                throw std::logic_error("shift phase: inconsistent child budget");
            int recipient = ord_[r + 1];
            for (int i = keep; i < static_cast<int>(children.size()); ++i) {
                if (f_[v] < f_[recipient] - kEqualF)
                    throw std::logic_error("shift phase: carried values out of order");
                do_shift({children[i], v, recipient});
            }
        }
    }

    NormalizeResult finish() {
        TreeWithBoundary result = tree_from_adj(n_, adj_);
        RearrangeTrace trace{initial_, result, f_, initial_rayleigh_, std::move(steps_)};
        VertexOrdering ordering{ord_};
        return {std::move(result), std::move(trace), std::move(ordering)};
    }

private:
    std::vector<int> sorted_degrees() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = static_cast<int>(adj_[v].size());
        std::sort(d.begin(), d.end());
        return d;
    }

    double current_rayleigh() const {
        double num = 0.0;
        for (int v = 0; v < n_; ++v)
            for (int w : adj_[v])
                if (v < w) num += (f_[v] - f_[w]) * (f_[v] - f_[w]);
        return num / f_norm_sq_;
    }

    // Non-increasing f, ties resolved by (height, degree, subtree code, id)
    // in the initial tree rooted at the maximal-f vertex.
    void init_ordering() {
        int root = 0;
        for (int v = 1; v < n_; ++v)
            if (f_[v] > f_[root]) root = v;
        RootedView view = rooted_view(initial_, root);
        ord_.resize(n_);
        for (int v = 0; v < n_; ++v) ord_[v] = v;
        std::sort(ord_.begin(), ord_.end(), [&](int a, int b) {
            if (f_[a] != f_[b]) return f_[a] > f_[b];
            if (view.height[a] != view.height[b]) return view.height[a] < view.height[b];
            if (initial_.degree(a) != initial_.degree(b))
                return initial_.degree(a) < initial_.degree(b);
            if (view.subtree_code[a] != view.subtree_code[b])
                return view.subtree_code[a] < view.subtree_code[b];
            return a < b;
        });
        pos_.assign(n_, -1);
        for (int i = 0; i < n_; ++i) pos_[ord_[i]] = i;
    }

    // Makes ord_[r_rank] a neighbor of p. Either it already is, or an
    // equal-valued neighbor takes its place in the ordering, or one
    // switching step creates the edge.
    void attach(int p, int r_rank) {
        int c = ord_[r_rank];
        if (adj_[p].count(c)) {
            record_noop(p, c);
            return;
        }

        int swap_with = -1;
        for (int x : adj_[p])
            if (pos_[x] > r_rank && f_equal(f_[x], f_[c]))
                if (swap_with < 0 || pos_[x] < pos_[swap_with]) swap_with = x;
        if (swap_with >= 0) {
            std::swap(ord_[r_rank], ord_[pos_[swap_with]]);
            pos_[c] = pos_[swap_with];
            pos_[swap_with] = r_rank;
            record_noop(p, swap_with);
            return;
        }

        std::vector<int> path = path_in_adj(adj_, p, c);
        if (path.size() < 3) throw std::logic_error("attach: degenerate switch path");
        int q1 = path[1];
        int qm1 = path[path.size() - 2];
        SwitchMove m;
        if (pos_[q1] > r_rank) {
            // The path leaves p through an unplaced child: pull c up along it.
            int uc = -1;
            for (int x : adj_[c])
                if (x != qm1 && (uc < 0 || pos_[x] < pos_[uc])) uc = x;
            if (uc < 0) throw std::logic_error("attach: target child has no spare neighbor");
            m = SwitchMove{c, uc, p, q1};
        } else {
            // The path leaves p through placed structure: donate one of p's
            // unplaced children and take c from its current parent.
            int up = -1;
            for (int x : adj_[p])
                if (pos_[x] > r_rank && (up < 0 || pos_[x] < pos_[up])) up = x;
            if (up < 0) throw std::logic_error("attach: parent has no spare child");
            m = SwitchMove{p, up, c, qm1};
        }
        if (f_[m.v1] < f_[m.u2] - kEqualF || f_[m.v2] < f_[m.u1] - kEqualF)
            throw std::logic_error("attach: switching value conditions violated");
        do_switch(m);
    }

    void do_switch(const SwitchMove& m) {
        validate_switch_on(adj_, m);
        adj_[m.v1].erase(m.u1);
        adj_[m.u1].erase(m.v1);
        adj_[m.v2].erase(m.u2);
        adj_[m.u2].erase(m.v2);
        adj_[m.v1].insert(m.v2);
        adj_[m.v2].insert(m.v1);
        adj_[m.u1].insert(m.u2);
        adj_[m.u2].insert(m.u1);
        TraceMove mv;
        mv.kind = TraceMove::Kind::Switch;
        mv.sw = m;
        record(mv);
    }

    void do_shift(const ShiftMove& m) {
        validate_shift_on(adj_, m);
        adj_[m.u].erase(m.v1);
        adj_[m.v1].erase(m.u);
        adj_[m.u].insert(m.v2);
        adj_[m.v2].insert(m.u);
        TraceMove mv;
        mv.kind = TraceMove::Kind::Shift;
        mv.sh = m;
        record(mv);
    }

    void record_noop(int parent, int child) {
        TraceMove mv;
        mv.kind = TraceMove::Kind::Noop;
        mv.noop_parent = parent;
        mv.noop_child = child;
        record(mv);
    }

    void record(const TraceMove& mv) {
        double next = mv.effective() ? current_rayleigh() : rayleigh_;
        if (next > rayleigh_ + kRayleighSlack)
            throw std::logic_error("rearrangement increased the Rayleigh quotient");
        rayleigh_ = next;
        TraceStep step;
        step.move = mv;
        step.snapshot = static_cast<int>(steps_.size());
        step.rayleigh = rayleigh_;
        step.in_class = sorted_degrees() == initial_degrees_;
        steps_.push_back(std::move(step));
    }

    TreeWithBoundary initial_;
    int n_;
    std::vector<std::set<int>> adj_;
    std::vector<int> initial_degrees_;
    std::vector<double> f_;
    double f_norm_sq_ = 1.0;
    std::vector<int> ord_;
    std::vector<int> pos_;
    std::vector<TraceStep> steps_;
    double rayleigh_ = 0.0;
    double initial_rayleigh_ = 0.0;
};

}  // namespace

int RearrangeTrace::effective_moves() const {
    int count = 0;
    for (const auto& s : steps)
        if (s.move.effective()) ++count;
    return count;
}

TreeWithBoundary apply_switch(const TreeWithBoundary& t, const SwitchMove& m) {
    auto adj = adjacency_of(t);
    validate_switch_on(adj, m);
    adj[m.v1].erase(m.u1);
    adj[m.u1].erase(m.v1);
    adj[m.v2].erase(m.u2);
    adj[m.u2].erase(m.v2);
    adj[m.v1].insert(m.v2);
    adj[m.v2].insert(m.v1);
    adj[m.u1].insert(m.u2);
    adj[m.u2].insert(m.u1);
    return tree_from_adj(t.vertex_count(), adj);
}

double switch_delta(const std::vector<double>& f, const SwitchMove& m) {
    return 2.0 * (f.at(m.u1) - f.at(m.v2)) * (f.at(m.v1) - f.at(m.u2));
}

TreeWithBoundary apply_shift(const TreeWithBoundary& t, const ShiftMove& m) {
    auto adj = adjacency_of(t);
    validate_shift_on(adj, m);
    adj[m.u].erase(m.v1);
    adj[m.v1].erase(m.u);
    adj[m.u].insert(m.v2);
    adj[m.v2].insert(m.u);
    return tree_from_adj(t.vertex_count(), adj);
}

NormalizeResult normalize_to_slo(const TreeWithBoundary& t) {
    Rearranger r(t);
    r.slo_phase();
    return r.finish();
}

NormalizeResult normalize_to_slo_star(const TreeWithBoundary& t) {
    return majorize_normalize(t, degree_sequence_of(t));
}

NormalizeResult majorize_normalize(const TreeWithBoundary& t, const DegreeSequence& pi_target) {
    if (!is_tree_sequence(pi_target))
        throw std::invalid_argument("target is not a tree sequence: " + pi_target.to_string());
    DegreeSequence pi = degree_sequence_of(t);
    if (pi_target.total() != pi.total())
        throw std::invalid_argument("target sequence has a different vertex count");
    if (!compare_sequences(pi_target, pi).leq)
        throw std::invalid_argument("target sequence is not majorized by the input's sequence");
    Rearranger r(t);
    r.slo_phase();
    r.shift_phase(pi_target.padded());
    return r.finish();
}

SequenceComparison compare_sequences(const DegreeSequence& pi_a, const DegreeSequence& pi_b) {
    if (pi_a.total() != pi_b.total())
        throw std::invalid_argument("sequences have different lengths");
    std::vector<int> a = pi_a.padded(), b = pi_b.padded();
    long long sa = 0, sb = 0;
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
        sa += a[r];
        sb += b[r];
        if (sa > sb) return {false, r};
    }
    return {true, -1};
}

TreeWithBoundary replay_trace(const RearrangeTrace& trace, int count) {
    TreeWithBoundary t = trace.initial;
    int applied = 0;
    for (const auto& step : trace.steps) {
        if (count >= 0 && applied >= count) break;
        ++applied;
        switch (step.move.kind) {
            case TraceMove::Kind::Switch: t = apply_switch(t, step.move.sw); break;
            case TraceMove::Kind::Shift: t = apply_shift(t, step.move.sh); break;
            case TraceMove::Kind::Noop: break;
        }
    }
    return t;
}

std::vector<double> resolve_trace_lambdas(const RearrangeTrace& trace) {
    std::vector<double> lambdas;
    lambdas.push_back(first_eigenpair(trace.initial).lambda);
    TreeWithBoundary t = trace.initial;
    for (const auto& step : trace.steps) {
        switch (step.move.kind) {
            case TraceMove::Kind::Switch: t = apply_switch(t, step.move.sw); break;
            case TraceMove::Kind::Shift: t = apply_shift(t, step.move.sh); break;
            case TraceMove::Kind::Noop: break;
        }
        lambdas.push_back(first_eigenpair(t).lambda);
    }
    return lambdas;
}

}  // namespace fktree
