#pragma once

#include <vector>

#include "crn/network.hpp"
#include "crn/ratmat.hpp"

namespace crn {

// Total, strictly positive assignment of the network's rate
// variables, aligned with rate_variables(net).
using RateInstance = std::vector<Rat>;

struct CharPolyAdj {
    std::vector<Rat> char_poly;  // a_0..a_{n-1} of det(tI - A), monic
    RationalMatrix adjugate;
};

// One exact pass yielding the characteristic polynomial and the
// adjugate; A * Adj(A) = det(A) * I by construction.
CharPolyAdj faddeev_leverrier(const RationalMatrix& a);

struct SpectralReport {
    std::vector<Rat> char_poly;
    int algebraic_multiplicity_zero = 0;  // trailing zeros of char_poly
    int geometric_multiplicity_zero = 0;  // n - rank
    RationalMatrix adjugate;
    Rat determinant;
    int rank = 0;
};

// Numeric Jacobian G = S R at the instance. Throws
// std::invalid_argument if the instance is partial or not strictly
// positive.
RationalMatrix jacobian_at(const Network& net, const RateInstance& inst);

SpectralReport spectral_report_for(const RationalMatrix& g);
SpectralReport spectral_report(const Network& net, const RateInstance& inst);

}  // namespace crn
