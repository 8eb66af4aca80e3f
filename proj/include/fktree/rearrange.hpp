#pragma once

#include <string>
#include <vector>

#include "fktree/tree.hpp"

namespace fktree {

/// Replaces edges (v1,u1) and (v2,u2) by (v1,v2) and (u1,u2). Valid when u2
/// lies on the geodesic path v1 -> v2 (with u2 != v1) and u1 does not.
/// Preserves every vertex degree, hence the degree sequence and boundary set.
struct SwitchMove {
    int v1 = -1, u1 = -1, v2 = -1, u2 = -1;
};

/// Replaces edge (u,v1) by (u,v2). Valid when u is not on the geodesic path
/// v1 -> v2 and v2 != v1. Lowers d(v1) by one and raises d(v2) by one.
struct ShiftMove {
    int u = -1, v1 = -1, v2 = -1;
};

struct TraceMove {
    enum class Kind { Switch, Shift, Noop };
    Kind kind = Kind::Noop;
    SwitchMove sw;
    ShiftMove sh;
    int noop_parent = -1, noop_child = -1;
    bool effective() const { return kind != Kind::Noop; }
};

struct TraceStep {
    TraceMove move;
    int snapshot = 0;       // index into the move sequence; trees are replayable
    double rayleigh = 0.0;  // Rayleigh quotient of the carried f after the move
    bool in_class = true;   // degree sequence still equals the initial one
};

/// Certificate for a rearrangement run. The carried function f is the first
/// eigenfunction of the initial tree and is never re-solved along the way,
/// exactly as the eigenvalue inequality chain requires; Rayleigh values are
/// non-increasing from initial_rayleigh = lambda(initial).
struct RearrangeTrace {
    TreeWithBoundary initial;
    TreeWithBoundary final_tree;
    std::vector<double> f;
    double initial_rayleigh = 0.0;
    std::vector<TraceStep> steps;

    int effective_moves() const;
};

struct NormalizeResult {
    TreeWithBoundary tree;
    RearrangeTrace trace;
    VertexOrdering ordering;
};

TreeWithBoundary apply_switch(const TreeWithBoundary& t, const SwitchMove& m);

/// Quadratic-form difference <L(G')f,f> - <L(G)f,f> in closed form:
/// 2 (f(u1)-f(v2)) (f(v1)-f(u2)).
double switch_delta(const std::vector<double>& f, const SwitchMove& m);

TreeWithBoundary apply_shift(const TreeWithBoundary& t, const ShiftMove& m);

/// Carries the first eigenfunction of t through a series of switchings that
/// grow a ball layer by layer in non-increasing f order. The result is an
/// SLO-tree with the same degree sequence and lambda(result) <= lambda(t);
/// the returned ordering satisfies (S1)-(S3).
NormalizeResult normalize_to_slo(const TreeWithBoundary& t);

/// normalize_to_slo followed by the shifting phase that reassigns degrees
/// non-decreasingly along the ordering. The result is the SLO*-tree of the
/// input's degree class.
NormalizeResult normalize_to_slo_star(const TreeWithBoundary& t);

/// Generalized shifting phase towards any target sequence majorized by the
/// input's sequence (pi_target trianglelefteq pi). The result is the
/// SLO*-tree of T_{pi_target} with lambda(result) <= lambda(t).
NormalizeResult majorize_normalize(const TreeWithBoundary& t, const DegreeSequence& pi_target);

struct SequenceComparison {
    bool leq = false;
    int witness = -1;  // first rank whose prefix sum fails, -1 when leq
};

/// Prefix-sum dominance pi_a trianglelefteq pi_b over the padded sequences
/// (interior sorted non-decreasingly, then the boundary 1s).
SequenceComparison compare_sequences(const DegreeSequence& pi_a, const DegreeSequence& pi_b);

/// Replays the first `count` moves of a trace (all of them if count < 0).
TreeWithBoundary replay_trace(const RearrangeTrace& trace, int count = -1);

/// Diagnostic: re-solves the first Dirichlet eigenvalue of every snapshot.
/// The certificate itself never does this.
std::vector<double> resolve_trace_lambdas(const RearrangeTrace& trace);

}  // namespace fktree
