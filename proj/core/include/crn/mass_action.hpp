#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crn/network.hpp"
#include "crn/oracle.hpp"

namespace crn {

// Mass-action parameters: one positive rate constant per reaction
// (inflow reactions carry their constant feed here) and one positive
// concentration per species.
struct MassActionInstance {
    std::vector<Rat> k;  // aligned with net.reactions
    std::vector<Rat> x;  // aligned with net.species
};

// r_j = k_j * prod_m x_m^(s^j_m). Requires integer reactant
// coefficients so rates stay rational; throws std::domain_error
// otherwise.
std::vector<Rat> ma_rates(const Network& net, const MassActionInstance& inst);

// The rate derivatives r_jm = k_j * s^j_m * x_m^(s-1) * prod_{n != m}
// x_n^(s^j_n), as a RateInstance aligned with rate_variables(net).
RateInstance ma_jacobian_rates(const Network& net,
                               const MassActionInstance& inst);

struct EquilibriumCheck {
    std::vector<Rat> rates;     // r(x)
    std::vector<Rat> residual;  // S r(x); zero iff x is an equilibrium
    SpectralReport report;      // spectral data of the Jacobian there
};

EquilibriumCheck check_equilibrium(const Network& net,
                                   const MassActionInstance& inst);

// Randomized hunt for a positive equilibrium with singular Jacobian:
// sample x, solve the k-linear residual system {S diag(phi(x)) k = 0,
// k >= 1} exactly, and keep (k, x) if the Jacobian determinant
// vanishes. Sound but incomplete; the counters record the evidence
// behind an absent witness.
struct ProbeResult {
    std::optional<MassActionInstance> witness;
    int tried = 0;
    int equilibria_found = 0;
};

ProbeResult probe_singular_equilibrium(const Network& net, uint64_t seed,
                                       int attempts);

}  // namespace crn
