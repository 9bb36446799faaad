#pragma once

// Independent reference implementations used to cross-check the
// library. Deliberately naive: Leibniz permutation sums instead of
// elimination or cofactor recursion, odometer enumeration instead of
// backtracking, algebraic identities instead of the production
// formulas. Only usable for small inputs.

#include <algorithm>
#include <numeric>
#include <vector>

#include <crn/mass_action.hpp>
#include <crn/multipoly.hpp>
#include <crn/network.hpp>
#include <crn/ratmat.hpp>
#include <crn/stoich.hpp>
#include <crn/sym_matrix.hpp>

namespace oracles {

inline int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// det by the full permutation sum; the empty determinant is 1.
inline crn::Rat perm_det(const crn::RationalMatrix& m) {
    const int n = m.rows();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    crn::Rat acc = 0;
    do {
        crn::Rat prod = permutation_sign(p);
        for (int i = 0; i < n; ++i) prod *= m.at(i, p[i]);
        acc += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

inline crn::MultiPoly perm_det_sym(const crn::SymMatrix& m) {
    const int n = m.rows();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    crn::MultiPoly acc;
    do {
        crn::MultiPoly prod{crn::Rat(permutation_sign(p))};
        for (int i = 0; i < n; ++i) prod = prod * m.at(i, p[i]);
        acc += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

struct BruteSelection {
    std::vector<int> assignment;
    crn::Rat coefficient;
};

// All injective species -> reaction maps where every species is a
// reactant of its image, found by walking every tuple in E^M. The
// coefficient is the permutation-sum determinant of the selected
// stoichiometric columns (rows optionally restricted).
inline std::vector<BruteSelection> brute_child_selections(
    const crn::Network& net) {
    const int m = net.num_species();
    const int e = net.num_reactions();
    std::vector<BruteSelection> out;
    if (m == 0 || e == 0) return out;
    auto s = crn::stoichiometric_matrix(net);
    std::vector<int> tup(m, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(net.reactions[tup[i]].reactant_coeff(i) > 0)) ok = false;
            for (int j = 0; j < i && ok; ++j) {
                if (tup[j] == tup[i]) ok = false;
            }
        }
        if (ok) {
            crn::RationalMatrix sel(m, m);
            for (int r = 0; r < m; ++r) {
                for (int c = 0; c < m; ++c) sel.at(r, c) = s.at(r, tup[c]);
            }
            out.push_back({tup, perm_det(sel)});
        }
        int pos = m - 1;
        while (pos >= 0 && ++tup[pos] == e) {
            tup[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

// Same with one species left out: its row is dropped from the minor
// and its assignment slot holds -1.
inline std::vector<BruteSelection> brute_partial_child_selections(
    const crn::Network& net, int omitted) {
    const int m = net.num_species();
    const int e = net.num_reactions();
    std::vector<BruteSelection> out;
    auto s = crn::stoichiometric_matrix(net);
    std::vector<int> kept;
    for (int i = 0; i < m; ++i) {
        if (i != omitted) kept.push_back(i);
    }
    const int km = static_cast<int>(kept.size());
    if (km == 0) {
        out.push_back({std::vector<int>(m, -1), crn::Rat(1)});
        return out;
    }
    if (e == 0) return out;
    std::vector<int> tup(km, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < km && ok; ++i) {
            if (!(net.reactions[tup[i]].reactant_coeff(kept[i]) > 0)) ok = false;
            for (int j = 0; j < i && ok; ++j) {
                if (tup[j] == tup[i]) ok = false;
            }
        }
        if (ok) {
            crn::RationalMatrix sel(km, km);
            for (int r = 0; r < km; ++r) {
                for (int c = 0; c < km; ++c) sel.at(r, c) = s.at(kept[r], tup[c]);
            }
            std::vector<int> assignment(m, -1);
            for (int i = 0; i < km; ++i) assignment[kept[i]] = tup[i];
            out.push_back({std::move(assignment), perm_det(sel)});
        }
        int pos = km - 1;
        while (pos >= 0 && ++tup[pos] == e) {
            tup[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

// Rank by plain row echelon with first-nonzero pivoting (the library
// uses full pivoting, so agreement is meaningful).
inline int echelon_rank(crn::RationalMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < m.cols(); ++c)
                std::swap(m.at(pivot, c), m.at(rank, c));
        }
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            crn::Rat f = m.at(r, col) / m.at(rank, col);
            for (int c = col; c < m.cols(); ++c) {
                m.at(r, c) -= f * m.at(rank, c);
            }
        }
        ++rank;
    }
    return rank;
}

// For mass action, x_m * dr_j/dx_m == s^j_m * r_j(x) is an exact
// identity; it checks the derivative vector against the plain rates
// without repeating the derivative formula.
inline bool mass_action_derivatives_consistent(
    const crn::Network& net, const crn::MassActionInstance& inst) {
    auto rates = crn::ma_rates(net, inst);
    auto derivs = crn::ma_jacobian_rates(net, inst);
    auto vars = crn::rate_variables(net);
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto& rv = vars[v];
        crn::Rat lhs = inst.x[rv.species] * derivs[v];
        crn::Rat rhs =
            net.reactions[rv.reaction].reactant_coeff(rv.species) *
            rates[rv.reaction];
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace oracles
