#include "crn/mass_action.hpp"

#include <stdexcept>

#include "crn/rng.hpp"
#include "crn/simplex.hpp"
#include "crn/stoich.hpp"

namespace crn {

namespace {

void check_instance(const Network& net, const MassActionInstance& inst) {
    if (static_cast<int>(inst.k.size()) != net.num_reactions() ||
        static_cast<int>(inst.x.size()) != net.num_species()) {
        throw std::invalid_argument("mass-action instance shape mismatch");
    }
    for (const Rat& v : inst.k) {
        if (sign(v) <= 0) {
            throw std::invalid_argument("rate constants must be positive");
        }
    }
    for (const Rat& v : inst.x) {
        if (sign(v) <= 0) {
            throw std::invalid_argument("concentrations must be positive");
        }
    }
}

unsigned long integer_exponent(const Rat& coeff) {
    if (coeff.get_den() != 1 || sign(coeff) < 0 ||
        !coeff.get_num().fits_ulong_p()) {
        throw std::domain_error(
            "mass action needs nonnegative integer reactant coefficients");
    }
    return coeff.get_num().get_ui();
}

// prod_m x_m^(s^j_m) over the reactants of j.
Rat monomial_factor(const Reaction& rx, const std::vector<Rat>& x) {
    Rat phi = 1;
    for (const auto& [m, coeff] : rx.reactants) {
        phi *= pow_rat(x[m], integer_exponent(coeff));
    }
    return phi;
}

}  // namespace

std::vector<Rat> ma_rates(const Network& net, const MassActionInstance& inst) {
    check_instance(net, inst);
    std::vector<Rat> rates(net.num_reactions());
    for (int j = 0; j < net.num_reactions(); ++j) {
        rates[j] = inst.k[j] * monomial_factor(net.reactions[j], inst.x);
    }
    return rates;
}

RateInstance ma_jacobian_rates(const Network& net,
                               const MassActionInstance& inst) {
    check_instance(net, inst);
    auto vars = rate_variables(net);
    RateInstance values(vars.size());
    for (size_t v = 0; v < vars.size(); ++v) {
        const Reaction& rx = net.reactions[vars[v].reaction];
        const int m = vars[v].species;
        unsigned long s = integer_exponent(rx.reactants.at(m));
        Rat d = inst.k[vars[v].reaction] * static_cast<long>(s) *
                pow_rat(inst.x[m], s - 1);
        for (const auto& [n, coeff] : rx.reactants) {
            if (n == m) continue;
            d *= pow_rat(inst.x[n], integer_exponent(coeff));
        }
        values[v] = d;
    }
    return values;
}

EquilibriumCheck check_equilibrium(const Network& net,
                                   const MassActionInstance& inst) {
    EquilibriumCheck out;
    out.rates = ma_rates(net, inst);
    out.residual = stoichiometric_matrix(net) * out.rates;
    out.report = spectral_report(net, ma_jacobian_rates(net, inst));
    return out;
}

ProbeResult probe_singular_equilibrium(const Network& net, uint64_t seed,
                                       int attempts) {
    ProbeResult out;
    RationalMatrix s = stoichiometric_matrix(net);
    const int e = net.num_reactions();
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        ++out.tried;
        MassActionInstance inst;
        inst.x.resize(net.num_species());
        for (Rat& v : inst.x) v = random_positive_rational(rng);

        // Residual is linear in k: S diag(phi(x)) k = 0. Look for
        // k >= 1 exactly, substituting k = w + 1.
        RationalMatrix a(s.rows(), e);
        std::vector<Rat> phi(e);
        for (int j = 0; j < e; ++j) {
            phi[j] = monomial_factor(net.reactions[j], inst.x);
            for (int i = 0; i < s.rows(); ++i) {
                a.at(i, j) = s.at(i, j) * phi[j];
            }
        }
        std::vector<Rat> b(s.rows());
        for (int i = 0; i < s.rows(); ++i) {
            Rat row_sum = 0;
            for (int j = 0; j < e; ++j) row_sum += a.at(i, j);
            b[i] = -row_sum;
        }
        auto w = feasible_point(a, b);
        if (!w) continue;
        ++out.equilibria_found;
        inst.k.resize(e);
        for (int j = 0; j < e; ++j) inst.k[j] = (*w)[j] + 1;

        RationalMatrix g = jacobian_at(net, ma_jacobian_rates(net, inst));
        if (det_bareiss(std::move(g)) == 0) {
            out.witness = std::move(inst);
            return out;
        }
    }
    return out;
}

}  // namespace crn
