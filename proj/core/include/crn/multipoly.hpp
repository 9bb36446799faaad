#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

// Power product over integer variable indices. Exponents are stored
// sparsely, sorted by variable, never zero.
class Monomial {
  public:
    Monomial() = default;
    static Monomial variable(int v, int exponent = 1);
    static Monomial from_exponents(std::vector<std::pair<int, int>> exps);

    bool is_one() const { return exps_.empty(); }
    int degree() const;
    int exponent(int v) const;
    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;
    // Componentwise quotient, or nullopt when some exponent would go
    // negative.
    std::optional<Monomial> divide(const Monomial& other) const;

  private:
    std::vector<std::pair<int, int>> exps_;
};

bool operator==(const Monomial& a, const Monomial& b);
bool operator!=(const Monomial& a, const Monomial& b);

// Graded lexicographic comparison: +1 if a is larger, 0 equal, -1
// smaller. Degree first; ties go to the monomial with the larger
// exponent at the earliest differing variable.
int grlex_cmp(const Monomial& a, const Monomial& b);

// Orders map keys so iteration runs from the leading term down.
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

// Sparse polynomial with exact rational coefficients in canonical
// form: no zero coefficients, terms keyed by monomial in descending
// graded-lex order, so equality is map equality.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rat, MonomialDescending>;

    MultiPoly() = default;
    explicit MultiPoly(Rat constant);
    static MultiPoly variable(int v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int num_terms() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;  // 0 for the zero polynomial
    int degree_in(int v) const;
    const TermMap& terms() const { return terms_; }

    // Adds c * m, merging and dropping cancellations.
    void add_term(const Monomial& m, const Rat& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator*(const Rat& scalar) const;
    MultiPoly operator/(const Rat& scalar) const;

    bool operator==(const MultiPoly& other) const;
    bool operator!=(const MultiPoly& other) const;

    // Substitutes values[v] for every variable v; values must cover
    // every variable that occurs (throws std::out_of_range otherwise).
    Rat evaluate(const std::vector<Rat>& values) const;

    // Partial evaluation of one variable.
    MultiPoly substitute(int v, const Rat& value) const;

  private:
    TermMap terms_;
};

MultiPoly operator*(const Rat& scalar, const MultiPoly& p);

// Quotient q with f == q * g, or nullopt when g does not divide f
// exactly. g must be nonzero.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

// Greatest monomial dividing every term (the monomial gcd); the unit
// monomial for the zero polynomial.
Monomial monomial_content(const MultiPoly& p);

// Writes p = a*v + b where v occurs in neither a nor b; requires
// degree_in(v) <= 1.
std::pair<MultiPoly, MultiPoly> split_linear(const MultiPoly& p, int v);

// Canonical rendering: terms from the leading monomial down, every
// coefficient printed, e.g. "1*x*y - 2*z" with "^e" for exponents
// above one. names[v] labels variable v.
std::string to_string(const MultiPoly& p,
                      const std::vector<std::string>& names);

}  // namespace crn
