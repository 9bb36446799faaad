#pragma once

#include <optional>
#include <vector>

#include "crn/ratmat.hpp"

namespace crn {

// Exact feasibility of {A x = b, x >= 0} by phase-one simplex with Bland's
// rule (no cycling, guaranteed termination). Returns a feasible basic
// solution or nullopt when the system is infeasible.
std::optional<std::vector<Rat>> feasible_point(const RationalMatrix& A,
                                               const std::vector<Rat>& b);

}  // namespace crn
