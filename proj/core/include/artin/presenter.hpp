#pragma once

#include "artin/presentation.hpp"
#include "artin/twist.hpp"

#include <vector>

namespace artin {

// Artin presentation of the framed tree: for chord j,
//   r_j = prod_B (x_{start(B)} ... x_{end(B)})^{e_B} * x_j^{m_j - sum_B e_B},
// B running over the chain of blocks containing j, outermost first; reduced.
// Width-1 blocks participate like any block. Throws std::invalid_argument on
// an invalid tree or framing length mismatch.
Presentation relators_from_tree(const FramedTwistTree& ft);

// The three relators of the small 3-braid family
// sigma1^{2 e1} sigma2^{2 f1} (sigma2 sigma1 sigma2)^{2 e}, reduced:
//   c  = x1 (x2 x3)^{f1} x2 (x2 x3)^{-f1}
//   r1 = (x1 x2 x3)^e c^{e1} x1^{m1 - e - e1}
//   r2 = (x1 x2 x3)^e (x2 x3)^{f1} c^{e1} x2^{m2 - e - e1 - f1}
//   r3 = (x1 x2 x3)^e (x2 x3)^{f1} x3^{m3 - e - f1}
Presentation relators_small3(int e, int e1, int f1, int m1, int m2, int m3);

// s_j = m_j - sum over blocks containing chord j of their exponents.
std::vector<long long> positivity_slack(const FramedTwistTree& ft);

// Unreduced letter count of each relator relators_from_tree would build;
// used for resource-limit checks before generating.
std::vector<long long> relator_letter_bounds(const FramedTwistTree& ft);

} // namespace artin
