#pragma once

#include <string>

#include "fktree/enumerate.hpp"
#include "fktree/rearrange.hpp"
#include "fktree/spectral.hpp"
#include "fktree/tree.hpp"

namespace fktree {

/// Doubles are serialized with %.17g so identical inputs give byte-identical
/// output and values round-trip exactly.
std::string format_double17(double x);

std::string eigenpair_to_json(const DirichletEigenpair& pair);
std::string trace_to_json(const RearrangeTrace& trace);
std::string census_to_json(const ClassCensus& census);
std::string census_to_csv(const ClassCensus& census);
std::string report_to_json(const VerifyReport& report);
std::string comparison_to_json(const DegreeSequence& pi_a, const DegreeSequence& pi_b,
                               const SequenceComparison& cmp, double lambda_a, double lambda_b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fktree
