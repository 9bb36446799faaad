#include "crn/oracle.hpp"

#include <stdexcept>
#include <utility>

#include "crn/stoich.hpp"

namespace crn {

CharPolyAdj faddeev_leverrier(const RationalMatrix& a) {
    const int n = a.rows();
    if (n != a.cols()) {
        throw std::invalid_argument("faddeev_leverrier: non-square matrix");
    }
    CharPolyAdj out;
    out.char_poly.assign(n, Rat(0));
    if (n == 0) {
        out.adjugate = RationalMatrix(0, 0);
        return out;
    }
    // M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
    RationalMatrix m = RationalMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        RationalMatrix prod = a * m;
        Rat c = -(prod.trace() / k);
        out.char_poly[n - k] = c;
        if (k == n) break;  // m is M_n here
        m = std::move(prod);
        for (int i = 0; i < n; ++i) m.at(i, i) += c;
    }
    // Adj(A) = (-1)^(n-1) M_n
    out.adjugate = (n % 2 == 0) ? m.scaled(Rat(-1)) : std::move(m);
    return out;
}

RationalMatrix jacobian_at(const Network& net, const RateInstance& inst) {
    auto vars = rate_variables(net);
    if (inst.size() != vars.size()) {
        throw std::invalid_argument(
            "instance does not cover the rate variables");
    }
    RationalMatrix r(net.num_reactions(), net.num_species());
    for (size_t v = 0; v < vars.size(); ++v) {
        if (sign(inst[v]) <= 0) {
            throw std::invalid_argument(
                "rate derivatives must be strictly positive");
        }
        r.at(vars[v].reaction, vars[v].species) = inst[v];
    }
    return stoichiometric_matrix(net) * r;
}

SpectralReport spectral_report_for(const RationalMatrix& g) {
    const int n = g.rows();
    SpectralReport rep;
    CharPolyAdj fl = faddeev_leverrier(g);
    rep.char_poly = std::move(fl.char_poly);
    rep.adjugate = std::move(fl.adjugate);
    rep.rank = rank_rational(g);
    rep.geometric_multiplicity_zero = n - rep.rank;
    rep.algebraic_multiplicity_zero = n;
    for (int k = 0; k < n; ++k) {
        if (rep.char_poly[k] != 0) {
            rep.algebraic_multiplicity_zero = k;
            break;
        }
    }
    if (n == 0) {
        rep.determinant = 1;
    } else {
        rep.determinant = (n % 2 == 0) ? rep.char_poly[0] : -rep.char_poly[0];
    }
    return rep;
}

SpectralReport spectral_report(const Network& net, const RateInstance& inst) {
    return spectral_report_for(jacobian_at(net, inst));
}

}  // namespace crn
