#pragma once

#include "taut/pipeline.hpp"
#include "taut/report.hpp"

#include <string>
#include <vector>

namespace taut {

Report model_report(const Pipeline& p);
Report cohomology_report(const Pipeline& p, int max_degree);
Report kappa_report(const Pipeline& p, const std::string& class_expr, bool fiberwise);
// Uses the given classes, else the setup's `classes` option, else a minimal
// generating set of all kappa-classes.
Report taut_ring_report(const Pipeline& p, const std::vector<std::string>& classes, const std::string& method,
                        bool fiberwise);
Report invariants_report(const Pipeline& p);
Report kahler_report(int m, int cutoff);
Report cp2_ring_report(const Pipeline& p);
Report hilbert_report(const Pipeline& p);

// Rows for a ring presentation: generators with values, then relations.
void add_presentation(Report& r, const RingPresentation& p, const std::string& prefix = "");

}  // namespace taut
