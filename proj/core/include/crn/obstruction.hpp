#pragma once

#include <cstdint>
#include <optional>

#include "crn/limits.hpp"
#include "crn/multipoly.hpp"
#include "crn/network.hpp"
#include "crn/oracle.hpp"

namespace crn {

// Classification of the multiset of child-selection coefficients.
// A uniform sign (with at least one nonzero) keeps the determinant
// away from zero on the positive orthant, since every monomial is
// positive there.
enum class SignClass { AllNonnegative, AllNonpositive, Mixed, AllZero };

SignClass sign_classification(const Network& net, const Limits& limits = {});

// Hunts for a strictly positive instance with det = 0 by sampling
// every variable but one and solving the remaining degree-1 equation
// exactly. Returns the first hit within `attempts` samples.
std::optional<RateInstance> singular_witness(const Network& net, uint64_t seed,
                                             int attempts,
                                             const Limits& limits = {});

// det = lead * content * factor with content = monomial_content(det)
// and factor monic and nonconstant; quotient * factor = trAdj. Since
// monomials never vanish at positive rates, det = 0 forces factor = 0
// and hence trAdj = 0 on the positive orthant.
struct Certificate {
    Monomial content;
    Rat lead;
    MultiPoly factor;
    MultiPoly quotient;
};

std::optional<Certificate> divisibility_certificate(const MultiPoly& det,
                                                    const MultiPoly& tr_adj);

enum class VerdictKind {
    NonsingularStructural,  // det has one sign on the positive orthant
    Degenerate,             // det identically zero
    SimpleZeroAchievable,   // witness with det = 0 and trAdj != 0
    Obstructed,             // singular forces trAdj = 0 (certificate)
    Undecided,
};

const char* verdict_name(VerdictKind kind);

struct SampleEvidence {
    int tried = 0;
    int singular_found = 0;
};

struct ObstructionVerdict {
    VerdictKind kind = VerdictKind::Undecided;
    MultiPoly det;
    MultiPoly tr_adj;
    std::optional<Certificate> certificate;
    std::optional<RateInstance> witness;
    SampleEvidence evidence;
};

ObstructionVerdict obstruction_verdict(const Network& net, uint64_t seed = 0,
                                       int samples = 256,
                                       const Limits& limits = {});

enum class GeometricClass { AdjugateZero, AdjugateNonzero };

// At a singular instance, a zero adjugate means the kernel is at
// least two-dimensional; a nonzero one means geometric multiplicity
// exactly one. Throws std::invalid_argument unless det = 0 at inst.
GeometricClass geometric_check_at(const Network& net,
                                  const RateInstance& inst);

}  // namespace crn
