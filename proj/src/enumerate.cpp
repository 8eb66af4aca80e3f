#include "fktree/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fktree/spectral.hpp"

namespace fktree {

namespace {

// Multiset of still-unused degree values.
struct Pool {
    std::vector<std::pair<int, int>> items;  // (value, count), ascending values
    int vertices = 0;

    explicit Pool(const std::vector<int>& degrees) {
        std::map<int, int> m;
        for (int d : degrees) ++m[d];
        items.assign(m.begin(), m.end());
        vertices = static_cast<int>(degrees.size());
    }
    bool take(int value) {
        for (auto& [v, c] : items)
            if (v == value && c > 0) {
                --c;
                --vertices;
                return true;
            }
        return false;
    }
    void put(int value) {
        for (auto& [v, c] : items)
            if (v == value) {
                ++c;
                ++vertices;
                return;
            }
    }
};

// Rooted subtree in canonical form: children sorted by code.
struct Shape {
    int degree = 1;  // degree of the root in the full tree (children + parent edge)
    std::vector<Shape> children;
    std::string code = "()";
    int height = 0;
};

using ShapeSink = std::function<void(const Shape&)>;

void gen_shape(Pool& pool, const std::string& min_code, const ShapeSink& sink);

// Emits every non-decreasing (by code) sequence of `slots` child shapes drawn
// from the pool, accumulating into `acc`.
void gen_children(Pool& pool, int slots, const std::string& min_code, std::vector<Shape>& acc,
                  const std::function<void()>& done) {
    if (slots == 0) {
        done();
        return;
    }
    if (pool.vertices < slots) return;
    gen_shape(pool, min_code, [&](const Shape& s) {
        acc.push_back(s);
        gen_children(pool, slots - 1, s.code, acc, done);
        acc.pop_back();
    });
}

void gen_shape(Pool& pool, const std::string& min_code, const ShapeSink& sink) {
    for (size_t i = 0; i < pool.items.size(); ++i) {
        const int d = pool.items[i].first;
        if (pool.items[i].second == 0) continue;
        pool.take(d);
        if (d == 1) {
            Shape leaf;
            if (leaf.code >= min_code) sink(leaf);
        } else {
            std::vector<Shape> acc;
            gen_children(pool, d - 1, "", acc, [&] {
                Shape node;
                node.degree = d;
                node.children = acc;
                node.code = "(";
                node.height = 0;
                for (const Shape& c : acc) {
                    node.code += c.code;
                    node.height = std::max(node.height, c.height + 1);
                }
                node.code += ')';
                if (node.code >= min_code) sink(node);
            });
        }
        pool.put(d);
    }
}

void shape_edges(const Shape& s, int self, int& next, std::vector<std::pair<int, int>>& edges) {
    for (const Shape& c : s.children) {
        int id = next++;
        edges.emplace_back(self, id);
        shape_edges(c, id, next, edges);
    }
}

int shape_size(const Shape& s) {
    int size = 1;
    for (const Shape& c : s.children) size += shape_size(c);
    return size;
}

// Exact-sum partitions into `parts` non-decreasing parts, each >= min_part.
void partitions_into(int total, int parts, int min_part,
                     const std::function<void(const std::vector<int>&)>& sink,
                     std::vector<int>& acc) {
    if (parts == 0) {
        if (total == 0) sink(acc);
        return;
    }
    for (int first = min_part; first * parts <= total; ++first) {
        acc.push_back(first);
        partitions_into(total - first, parts - 1, first, sink, acc);
        acc.pop_back();
    }
}

std::vector<DegreeSequence> interior_partitions(int n, int k, int min_degree) {
    std::vector<DegreeSequence> out;
    if (k < 1 || n - k < 1) return out;
    const int interior_sum = n + k - 2;  // = 2(n-1) - (n-k)
    std::vector<int> acc;
    partitions_into(interior_sum, k, std::max(2, min_degree),
                    [&](const std::vector<int>& parts) {
                        out.emplace_back(parts, n - k);
                    },
                    acc);
    return out;
}

}  // namespace

std::vector<TreeWithBoundary> enumerate_trees(const DegreeSequence& pi, int cap) {
    if (!is_tree_sequence(pi))
        throw std::invalid_argument("not a tree sequence: " + pi.to_string());
    if (pi.total() > cap)
        throw std::invalid_argument("enumeration cap exceeded: n=" + std::to_string(pi.total()) +
                                    " > cap=" + std::to_string(cap));

    std::vector<TreeWithBoundary> out;
    Pool pool(pi.padded());

    // Trees whose center is a single vertex: root it there. The root is the
    // unique center iff at least two child branches reach the maximum height.
    std::vector<int> interior_values;
    for (const auto& [v, c] : pool.items)
        if (v >= 2) interior_values.push_back(v);
    for (int dc : interior_values) {
        pool.take(dc);
        std::vector<Shape> acc;
        gen_children(pool, dc, "", acc, [&] {
            if (pool.vertices != 0) return;
            int hmax = 0;
            for (const Shape& c : acc) hmax = std::max(hmax, c.height);
            int at_max = 0;
            for (const Shape& c : acc)
                if (c.height == hmax) ++at_max;
            if (at_max < 2) return;
            std::vector<std::pair<int, int>> edges;
            int next = 1;
            for (const Shape& c : acc) {
                int id = next++;
                edges.emplace_back(0, id);
                shape_edges(c, id, next, edges);
            }
            out.emplace_back(pi.total(), std::move(edges));
        });
        pool.put(dc);
    }

    // Trees whose center is an edge: the two halves have equal height and
    // are kept in code order so each unordered pair appears once.
    gen_shape(pool, "", [&](const Shape& a) {
        if (a.degree == 1) return;
        gen_shape(pool, a.code, [&](const Shape& b) {
            if (b.degree == 1) return;
            if (pool.vertices != 0) return;
            if (a.height != b.height) return;
            std::vector<std::pair<int, int>> edges;
            int next = 1;
            const int b_root = shape_size(a);
            shape_edges(a, 0, next, edges);
            edges.emplace_back(0, b_root);
            next = b_root + 1;
            shape_edges(b, b_root, next, edges);
            out.emplace_back(pi.total(), std::move(edges));
        });
    });

    return out;
}

std::vector<DegreeSequence> tree_sequences_with_total(int n) {
    std::vector<DegreeSequence> out;
    for (int k = 1; k <= n - 2; ++k)
        for (auto& pi : interior_partitions(n, k, 2)) out.push_back(std::move(pi));
    return out;
}

std::vector<DegreeSequence> class_sequences(const ClassSpec& spec, int cap) {
    using Kind = ClassSpec::Kind;
    std::vector<DegreeSequence> out;
    switch (spec.kind) {
        case Kind::Tpi:
            if (!is_tree_sequence(*spec.pi))
                throw std::invalid_argument("not a tree sequence: " + spec.pi->to_string());
            out.push_back(*spec.pi);
            break;
        case Kind::Tnk:
            return interior_partitions(spec.n, spec.k, 2);
        case Kind::Tdnk:
            return interior_partitions(spec.n, spec.k, spec.d);
        case Kind::SemiRegular: {
            if (spec.d >= 2 && (spec.n - 2) % (spec.d - 1) == 0) {
                const int k = (spec.n - 2) / (spec.d - 1);
                if (k >= 1 && spec.n - k >= 1)
                    out.emplace_back(std::vector<int>(k, spec.d), spec.n - k);
            }
            break;
        }
        case Kind::TnAny:
            for (int k = 1; k <= spec.n - 2; ++k)
                for (auto& pi : interior_partitions(spec.n, k, 2)) out.push_back(std::move(pi));
            break;
        case Kind::TdnAny:
            for (int k = 1; k <= spec.n - 2; ++k)
                for (auto& pi : interior_partitions(spec.n, k, spec.d))
                    out.push_back(std::move(pi));
            break;
        case Kind::TAnyK:
            for (int n = spec.k + 2; n <= cap; ++n)
                for (auto& pi : interior_partitions(n, spec.k, 2)) out.push_back(std::move(pi));
            break;
        case Kind::TdAnyK:
            for (int n = spec.k + 2; n <= cap; ++n)
                for (auto& pi : interior_partitions(n, spec.k, spec.d))
                    out.push_back(std::move(pi));
            break;
    }
    return out;
}

std::vector<TreeWithBoundary> enumerate_class(const ClassSpec& spec, int cap) {
    std::vector<TreeWithBoundary> out;
    for (const DegreeSequence& pi : class_sequences(spec, cap))
        for (auto& t : enumerate_trees(pi, cap)) out.push_back(std::move(t));
    return out;
}

ClassCensus brute_force_minimizer(const ClassSpec& spec, double tol, int cap) {
    ClassCensus census;
    census.spec = spec;
    for (auto& tree : enumerate_class(spec, cap)) {
        CensusEntry entry{std::move(tree), "", 0.0};
        entry.code = canonical_form(entry.tree);
        entry.lambda = first_eigenpair(entry.tree).lambda;
        census.entries.push_back(std::move(entry));
    }
    std::sort(census.entries.begin(), census.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.code < b.code; });
    if (census.entries.empty()) {
        census.note = "empty class: no tree sequence satisfies the constraints of " +
                      spec.to_string();
        return census;
    }
    census.lambda_min = census.entries[0].lambda;
    for (const auto& e : census.entries) census.lambda_min = std::min(census.lambda_min, e.lambda);
    for (int i = 0; i < static_cast<int>(census.entries.size()); ++i)
        if (std::abs(census.entries[i].lambda - census.lambda_min) <=
            tol * std::max(1.0, census.lambda_min))
            census.argmin.push_back(i);
    return census;
}

}  // namespace fktree
