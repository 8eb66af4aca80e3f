#pragma once

#include <string>
#include <vector>

#include "fktree/extremal.hpp"
#include "fktree/tree.hpp"

namespace fktree {

inline constexpr int kDefaultEnumerationCap = 14;
inline constexpr double kCoMinimalTol = 1e-9;

struct CensusEntry {
    TreeWithBoundary tree;
    std::string code;
    double lambda = 0.0;
};

/// Every isomorphism class of a tree class, solved. argmin lists the entries
/// whose eigenvalue is within |lambda - lambda_min| <= tol * max(1, lambda_min).
/// Degenerate (empty) classes carry a reason in `note`.
struct ClassCensus {
    ClassSpec spec;
    std::vector<CensusEntry> entries;  // sorted by canonical code
    std::vector<int> argmin;
    double lambda_min = 0.0;
    std::string note;
};

/// Exactly one representative per isomorphism class of trees with boundary
/// realizing pi. Trees are generated directly in canonical center-rooted
/// form (sorted child codes, balanced root branches), so no post-hoc
/// deduplication happens. Throws when pi is not a tree sequence or its
/// vertex count exceeds the cap.
std::vector<TreeWithBoundary> enumerate_trees(const DegreeSequence& pi,
                                              int cap = kDefaultEnumerationCap);

/// All tree sequences compatible with the class constraints. For the
/// fixed-interior classes T(.,k) and T_d(.,k) the vertex count is sliced at
/// the cap (those classes are infinite). Infeasible classes come back empty.
std::vector<DegreeSequence> class_sequences(const ClassSpec& spec,
                                            int cap = kDefaultEnumerationCap);

/// Union of enumerate_trees over class_sequences(spec).
std::vector<TreeWithBoundary> enumerate_class(const ClassSpec& spec,
                                              int cap = kDefaultEnumerationCap);

/// All tree sequences with the given total vertex count.
std::vector<DegreeSequence> tree_sequences_with_total(int n);

ClassCensus brute_force_minimizer(const ClassSpec& spec, double tol = kCoMinimalTol,
                                  int cap = kDefaultEnumerationCap);

struct VerifyInstance {
    std::string class_desc;
    bool pass = false;
    double lambda_min = 0.0;
    std::string minimizer_code;
    std::string constructed_code;
    std::string note;
};

struct VerifyReport {
    std::string theorem;
    int max_n = 0;
    std::vector<VerifyInstance> instances;
    bool all_pass = true;
};

/// Exhaustive check of one theorem over all class instances within max_n.
/// Identifiers: thm1, thm2, thm3, cor-semiregular, relaxed-i..relaxed-iv,
/// compare-seq. Failures become report entries, not errors.
VerifyReport verify_theorem(const std::string& theorem, int max_n);

}  // namespace fktree
