#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

// Dense matrix of exact rationals. Row-major storage; dimensions fixed at
// construction.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    Rat trace() const;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix scaled(const Rat& c) const;

    std::vector<Rat> operator*(const std::vector<Rat>& v) const;

    bool operator==(const RationalMatrix& rhs) const = default;

    std::string to_string() const;

private:
    int rows_;
    int cols_;
    std::vector<Rat> a_;
};

// Determinant by Bareiss fraction-free elimination with row pivoting.
// The 0x0 determinant is 1.
Rat det_bareiss(RationalMatrix m);

// Exact rank by fraction-free elimination with full pivoting.
int rank_rational(const RationalMatrix& m);

// Basis of the right kernel {v : m v = 0}, one vector per free column of the
// reduced echelon form.
std::vector<std::vector<Rat>> nullspace_basis(const RationalMatrix& m);

}  // namespace crn
