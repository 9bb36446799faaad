#pragma once

#include <optional>
#include <vector>

#include "crn/limits.hpp"
#include "crn/network.hpp"
#include "crn/ratmat.hpp"

namespace crn {

// Injective species -> reaction map where each species is a reactant
// of its assigned reaction. alpha is the determinant of the selected
// stoichiometric columns taken in species order.
struct ChildSelection {
    std::vector<int> assignment;  // species index -> reaction index
    Rat alpha;
};

// Child selection minus one species: the omitted species is assigned
// nothing (entry -1) and its row is dropped from the coefficient
// minor.
struct PartialChildSelection {
    int omitted;
    std::vector<int> assignment;  // assignment[omitted] == -1
    Rat beta;
};

// Determinant of the submatrix of s with the given columns (one per
// kept row, in row order), optionally dropping one row. The empty
// 0x0 determinant is 1. Throws std::invalid_argument on a column
// count mismatch.
Rat minor_determinant(const RationalMatrix& s, const std::vector<int>& columns,
                      std::optional<int> drop_row = std::nullopt);

// Complete, duplicate-free, deterministic enumerations (backtracking
// over species in index order, reactions in index order). Throw
// CapExceeded past limits.max_enum_nodes search nodes.
std::vector<ChildSelection> enumerate_child_selections(
    const Network& net, const Limits& limits = {});

std::vector<PartialChildSelection> enumerate_partial_child_selections(
    const Network& net, int omitted, const Limits& limits = {});

}  // namespace crn
