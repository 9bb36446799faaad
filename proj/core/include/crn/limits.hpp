#pragma once

#include <cstdint>

namespace crn {

// Budgets for the combinatorial and symbolic operations. Enumeration and
// polynomial growth are checked against these and abort with CapExceeded
// instead of thrashing.
struct Limits {
    std::int64_t max_enum_nodes = 10'000'000;  // backtracking nodes
    std::int64_t max_terms = 1'000'000;        // monomials per polynomial
    int max_charpoly_dim = 12;                 // symbolic char-poly dimension
};

}  // namespace crn
