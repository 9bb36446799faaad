#include "crn/sym_matrix.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "crn/errors.hpp"
#include "crn/selection.hpp"

namespace crn {

namespace {

void check_terms(const MultiPoly& p, const Limits& limits) {
    if (static_cast<int64_t>(p.num_terms()) > limits.max_terms) {
        throw CapExceeded("polynomial term cap exceeded");
    }
}

std::map<std::pair<int, int>, int> variable_index(
    const std::vector<RateVar>& vars) {
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < vars.size(); ++i) {
        index[{vars[i].reaction, vars[i].species}] = static_cast<int>(i);
    }
    return index;
}

}  // namespace

SymMatrix SymMatrix::identity(int n) {
    SymMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = MultiPoly(Rat(1));
    return out;
}

SymMatrix SymMatrix::operator*(const SymMatrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    SymMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const MultiPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const MultiPoly& b = other.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

MultiPoly SymMatrix::trace() const {
    MultiPoly t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

SymMatrix sym_jacobian(const Network& net) {
    const int m_count = net.num_species();
    RationalMatrix s = stoichiometric_matrix(net);
    auto vars = rate_variables(net);
    SymMatrix g(m_count, m_count);
    for (size_t v = 0; v < vars.size(); ++v) {
        const int j = vars[v].reaction;
        const int n = vars[v].species;
        MultiPoly r = MultiPoly::variable(static_cast<int>(v));
        for (int m = 0; m < m_count; ++m) {
            if (s.at(m, j) != 0) g.at(m, n) += r * s.at(m, j);
        }
    }
    return g;
}

std::vector<std::string> rate_var_names(const Network& net) {
    std::vector<std::string> names;
    for (const RateVar& v : rate_variables(net)) {
        names.push_back(rate_var_name(net, v));
    }
    return names;
}

RationalMatrix evaluate(const SymMatrix& g, const std::vector<Rat>& values) {
    RationalMatrix out(g.rows(), g.cols());
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j) {
            out.at(i, j) = g.at(i, j).evaluate(values);
        }
    }
    return out;
}

namespace {

// Cofactor expansion along rows[pos], over the surviving columns.
MultiPoly det_minor(const SymMatrix& g, const std::vector<int>& rows,
                    size_t pos, const std::vector<int>& cols,
                    const Limits& limits) {
    if (pos == rows.size()) return MultiPoly(Rat(1));
    MultiPoly acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        const MultiPoly& e = g.at(rows[pos], cols[k]);
        if (e.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t i = 0; i < cols.size(); ++i) {
            if (i != k) rest.push_back(cols[i]);
        }
        MultiPoly term = e * det_minor(g, rows, pos + 1, rest, limits);
        if (k % 2 == 1) {
            acc -= term;
        } else {
            acc += term;
        }
        check_terms(acc, limits);
    }
    return acc;
}

}  // namespace

MultiPoly det_direct(const SymMatrix& g, const Limits& limits) {
    if (g.rows() != g.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    std::vector<int> idx(g.rows());
    std::iota(idx.begin(), idx.end(), 0);
    return det_minor(g, idx, 0, idx, limits);
}

MultiPoly det_via_child_selections(const Network& net, const Limits& limits) {
    auto vars = rate_variables(net);
    auto vindex = variable_index(vars);
    MultiPoly det;
    for (const ChildSelection& cs : enumerate_child_selections(net, limits)) {
        if (cs.alpha == 0) continue;
        std::vector<std::pair<int, int>> exps;
        exps.reserve(net.num_species());
        for (int m = 0; m < net.num_species(); ++m) {
            exps.emplace_back(vindex.at({cs.assignment[m], m}), 1);
        }
        det.add_term(Monomial::from_exponents(std::move(exps)), cs.alpha);
        check_terms(det, limits);
    }
    return det;
}

SymMatrix adjugate_symbolic(const SymMatrix& g, const Limits& limits) {
    const int n = g.rows();
    if (n != g.cols()) {
        throw std::invalid_argument("adjugate of a non-square matrix");
    }
    SymMatrix adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = MultiPoly(Rat(1));
        return adj;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            rows.reserve(n - 1);
            cols.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r != j) rows.push_back(r);
            }
            for (int c = 0; c < n; ++c) {
                if (c != i) cols.push_back(c);
            }
            MultiPoly minor = det_minor(g, rows, 0, cols, limits);
            adj.at(i, j) = ((i + j) % 2 == 0) ? std::move(minor) : -minor;
        }
    }
    return adj;
}

MultiPoly adjugate_trace_via_pcs(const Network& net, const Limits& limits) {
    auto vars = rate_variables(net);
    auto vindex = variable_index(vars);
    MultiPoly tr;
    for (int omitted = 0; omitted < net.num_species(); ++omitted) {
        for (const PartialChildSelection& pcs :
             enumerate_partial_child_selections(net, omitted, limits)) {
            if (pcs.beta == 0) continue;
            std::vector<std::pair<int, int>> exps;
            exps.reserve(net.num_species() - 1);
            for (int n = 0; n < net.num_species(); ++n) {
                if (n == omitted) continue;
                exps.emplace_back(vindex.at({pcs.assignment[n], n}), 1);
            }
            tr.add_term(Monomial::from_exponents(std::move(exps)), pcs.beta);
            check_terms(tr, limits);
        }
    }
    return tr;
}

std::vector<MultiPoly> char_poly_symbolic(const SymMatrix& g,
                                          const Limits& limits) {
    const int n = g.rows();
    if (n != g.cols()) {
        throw std::invalid_argument("char poly of a non-square matrix");
    }
    if (n > limits.max_charpoly_dim) {
        throw CapExceeded("matrix dimension exceeds char-poly cap");
    }
    std::vector<MultiPoly> a(n);
    SymMatrix m = SymMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        SymMatrix prod = g * m;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) check_terms(prod.at(i, j), limits);
        }
        MultiPoly c = -(prod.trace() / Rat(k));
        if (k < n) {
            m = prod;
            for (int i = 0; i < n; ++i) m.at(i, i) += c;
        }
        a[n - k] = std::move(c);
    }
    return a;
}

}  // namespace crn
