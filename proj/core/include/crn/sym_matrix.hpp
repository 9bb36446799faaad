#pragma once

#include <string>
#include <vector>

#include "crn/limits.hpp"
#include "crn/multipoly.hpp"
#include "crn/network.hpp"
#include "crn/ratmat.hpp"
#include "crn/stoich.hpp"

namespace crn {

// Dense matrix of polynomials.
class SymMatrix {
  public:
    SymMatrix() = default;
    SymMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    static SymMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    MultiPoly& at(int i, int j) { return entries_[i * cols_ + j]; }
    const MultiPoly& at(int i, int j) const { return entries_[i * cols_ + j]; }

    SymMatrix operator*(const SymMatrix& other) const;
    MultiPoly trace() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<MultiPoly> entries_;
};

// Symbolic Jacobian G = S R: entry (m,n) = sum over reactions j
// consuming n of S[m][j] * r[j,n]. Polynomial variable v indexes
// rate_variables(net).
SymMatrix sym_jacobian(const Network& net);

// Display names for the polynomial variables, aligned with
// rate_variables(net).
std::vector<std::string> rate_var_names(const Network& net);

// Entrywise evaluation at a total assignment of the rate variables.
RationalMatrix evaluate(const SymMatrix& g, const std::vector<Rat>& values);

// Symbolic determinant by cofactor expansion; throws CapExceeded
// when an intermediate polynomial outgrows limits.max_terms.
MultiPoly det_direct(const SymMatrix& g, const Limits& limits = {});

// det G assembled one multilinear term alpha_J * prod_m r[J(m),m]
// per child selection.
MultiPoly det_via_child_selections(const Network& net,
                                   const Limits& limits = {});

// Adj(G)[i][j] = (-1)^(i+j) * det(G with row j and column i removed).
SymMatrix adjugate_symbolic(const SymMatrix& g, const Limits& limits = {});

// tr Adj(G) assembled from partial child selections: for each
// omitted species m, sum of beta * prod_{n != m} r[J(n),n].
MultiPoly adjugate_trace_via_pcs(const Network& net,
                                 const Limits& limits = {});

// Coefficients a_0..a_{n-1} of det(lambda I - G) = lambda^n +
// a_{n-1} lambda^{n-1} + ... + a_0, via Faddeev-LeVerrier over the
// polynomial ring. Throws CapExceeded when n exceeds
// limits.max_charpoly_dim or a term cap trips.
std::vector<MultiPoly> char_poly_symbolic(const SymMatrix& g,
                                          const Limits& limits = {});

}  // namespace crn
