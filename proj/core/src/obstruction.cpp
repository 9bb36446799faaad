#include "crn/obstruction.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "crn/rng.hpp"
#include "crn/selection.hpp"
#include "crn/sym_matrix.hpp"

namespace crn {

namespace {

SignClass classify(const std::vector<ChildSelection>& selections) {
    bool any_pos = false;
    bool any_neg = false;
    for (const ChildSelection& cs : selections) {
        int s = sign(cs.alpha);
        if (s > 0) any_pos = true;
        if (s < 0) any_neg = true;
    }
    if (any_pos && any_neg) return SignClass::Mixed;
    if (any_pos) return SignClass::AllNonnegative;
    if (any_neg) return SignClass::AllNonpositive;
    return SignClass::AllZero;
}

// Per-variable linear splits of the determinant, for on-variety
// sampling. Only variables the determinant actually touches count.
struct LinearSplits {
    std::vector<int> vars;
    std::vector<MultiPoly> coef;  // det = coef[i]*vars[i] + rest[i]
    std::vector<MultiPoly> rest;
};

LinearSplits make_splits(const MultiPoly& det, int num_vars) {
    LinearSplits out;
    constexpr int kMaxSolveVars = 64;
    for (int v = 0; v < num_vars; ++v) {
        if (det.degree_in(v) == 0) continue;
        auto [a, b] = split_linear(det, v);
        out.vars.push_back(v);
        out.coef.push_back(std::move(a));
        out.rest.push_back(std::move(b));
        if (static_cast<int>(out.vars.size()) >= kMaxSolveVars) break;
    }
    return out;
}

// One sampling round: random positive values, then the first solvable
// variable whose exact root is positive.
std::optional<RateInstance> try_singular_sample(const LinearSplits& splits,
                                                const MultiPoly& det,
                                                int num_vars, SplitMix64& rng) {
    RateInstance values(num_vars);
    for (int v = 0; v < num_vars; ++v) {
        values[v] = random_positive_rational(rng);
    }
    for (size_t i = 0; i < splits.vars.size(); ++i) {
        Rat a = splits.coef[i].evaluate(values);
        if (a == 0) continue;
        Rat b = splits.rest[i].evaluate(values);
        Rat root = -b / a;
        if (sign(root) <= 0) continue;
        values[splits.vars[i]] = root;
        if (det.evaluate(values) != 0) continue;  // defensive; exact solve
        return values;
    }
    return std::nullopt;
}

}  // namespace

SignClass sign_classification(const Network& net, const Limits& limits) {
    return classify(enumerate_child_selections(net, limits));
}

std::optional<RateInstance> singular_witness(const Network& net, uint64_t seed,
                                             int attempts,
                                             const Limits& limits) {
    MultiPoly det = det_via_child_selections(net, limits);
    if (det.is_zero()) return std::nullopt;
    const int num_vars = static_cast<int>(rate_variables(net).size());
    LinearSplits splits = make_splits(det, num_vars);
    SplitMix64 rng(seed);
    for (int i = 0; i < attempts; ++i) {
        if (auto w = try_singular_sample(splits, det, num_vars, rng)) return w;
    }
    return std::nullopt;
}

std::optional<Certificate> divisibility_certificate(const MultiPoly& det,
                                                    const MultiPoly& tr_adj) {
    if (det.is_zero()) {
        throw std::invalid_argument("certificate needs a nonzero determinant");
    }
    Monomial content = monomial_content(det);
    MultiPoly stripped;
    for (const auto& [m, c] : det.terms()) {
        stripped.add_term(*m.divide(content), c);
    }
    Rat lead = stripped.terms().begin()->second;
    MultiPoly factor = stripped / lead;
    // A constant factor divides everything; that certifies nothing.
    if (factor.is_constant()) return std::nullopt;
    auto quotient = exact_divide(tr_adj, factor);
    if (!quotient) return std::nullopt;
    return Certificate{std::move(content), std::move(lead), std::move(factor),
                       std::move(*quotient)};
}

const char* verdict_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::NonsingularStructural:
            return "NONSINGULAR_STRUCTURAL";
        case VerdictKind::Degenerate:
            return "DEGENERATE";
        case VerdictKind::SimpleZeroAchievable:
            return "SIMPLE_ZERO_ACHIEVABLE";
        case VerdictKind::Obstructed:
            return "OBSTRUCTED";
        case VerdictKind::Undecided:
            return "UNDECIDED";
    }
    return "UNDECIDED";
}

ObstructionVerdict obstruction_verdict(const Network& net, uint64_t seed,
                                       int samples, const Limits& limits) {
    ObstructionVerdict out;
    auto selections = enumerate_child_selections(net, limits);
    out.det = det_via_child_selections(net, limits);
    out.tr_adj = adjugate_trace_via_pcs(net, limits);

    switch (classify(selections)) {
        case SignClass::AllZero:
            out.kind = VerdictKind::Degenerate;
            return out;
        case SignClass::AllNonnegative:
        case SignClass::AllNonpositive:
            out.kind = VerdictKind::NonsingularStructural;
            return out;
        case SignClass::Mixed:
            break;
    }

    const int num_vars = static_cast<int>(rate_variables(net).size());
    LinearSplits splits = make_splits(out.det, num_vars);
    SplitMix64 rng(seed);
    std::optional<RateInstance> singular;
    for (int i = 0; i < samples; ++i) {
        ++out.evidence.tried;
        auto w = try_singular_sample(splits, out.det, num_vars, rng);
        if (!w) continue;
        ++out.evidence.singular_found;
        if (out.tr_adj.evaluate(*w) != 0) {
            out.kind = VerdictKind::SimpleZeroAchievable;
            out.witness = std::move(w);
            return out;
        }
        if (!singular) singular = std::move(w);
    }

    if (singular) {
        if (auto cert = divisibility_certificate(out.det, out.tr_adj)) {
            out.kind = VerdictKind::Obstructed;
            out.certificate = std::move(cert);
            out.witness = std::move(singular);
            return out;
        }
        out.witness = std::move(singular);
    }
    out.kind = VerdictKind::Undecided;
    return out;
}

GeometricClass geometric_check_at(const Network& net,
                                  const RateInstance& inst) {
    RationalMatrix g = jacobian_at(net, inst);
    CharPolyAdj fl = faddeev_leverrier(g);
    const int n = g.rows();
    Rat det = (n % 2 == 0) ? fl.char_poly[0] : -fl.char_poly[0];
    if (det != 0) {
        throw std::invalid_argument("instance is not singular");
    }
    return fl.adjugate.is_zero() ? GeometricClass::AdjugateZero
                                 : GeometricClass::AdjugateNonzero;
}

}  // namespace crn
