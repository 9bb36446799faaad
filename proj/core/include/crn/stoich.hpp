#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/ratmat.hpp"

namespace crn {

// Rate variable r[j,m]: the partial derivative of reaction j's rate
// with respect to its reactant m. Exists iff m is a reactant of j, so
// inflow reactions (constant rate) contribute none.
struct RateVar {
    int reaction;
    int species;
};

bool operator==(const RateVar& a, const RateVar& b);
bool operator<(const RateVar& a, const RateVar& b);

// S[m][j] = (product coefficient) - (reactant coefficient).
RationalMatrix stoichiometric_matrix(const Network& net);

// All rate variables, ordered by reaction then species.
std::vector<RateVar> rate_variables(const Network& net);

std::string rate_var_name(const Network& net, const RateVar& v);

// A strictly positive v with S v = 0 (normalized so every v_j >= 1),
// or nullopt when none exists. Decided exactly as feasibility of
// {S v = 0, v >= 1}; valid because kernel vectors scale.
std::optional<std::vector<Rat>> positive_kernel_vector(const Network& net);

}  // namespace crn
