#ifndef KAUFFMAN_VERIFY_HPP
#define KAUFFMAN_VERIFY_HPP

#include <string>
#include <vector>

#include "kauffman/report.hpp"

namespace kauffman {

// defining relations, checked on diagrams and in coordinates for each rank
Report verify_relations(int max_rank = 6);
// the cutting map is an idempotent endomorphism of the ≤2-t-wire part of J4
Report verify_cutting_j4();
// ... and of its preimage in the extended monoid, over a circle-count window
Report verify_cutting_k4(long long circle_min = -3, long long circle_max = 3);
// x = h1h2h3, y = h4 separate xxyx from xyxx in rank 5
Report verify_k5_counterexample();
// Jones monoid sizes against the Catalan numbers
Report verify_catalan(int max_rank = 7);

std::vector<std::string> verify_suite_names();
Report run_verify_suite(const std::string& name, int max_rank);

}  // namespace kauffman

#endif
