#include "crn/ratmat.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace crn {

std::optional<Rat> parse_rational(std::string_view text) {
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) return std::nullopt;
    }
    bool neg = !num.empty() && num.front() == '-';
    if (neg) num.remove_prefix(1);
    if (!all_digits(num)) return std::nullopt;

    Rat q(std::string(text), 10);
    q.canonicalize();
    if (!den.empty() && Rat(std::string(den), 10) == 0) return std::nullopt;
    return q;
}

Rat pow_rat(const Rat& q, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return out;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    for (const auto& r : rows) cols_ = std::max(cols_, static_cast<int>(r.size()));
    a_.resize(static_cast<std::size_t>(rows_) * cols_);
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (const auto& v : r) at(i, j++) = v;
        ++i;
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const Rat& v : a_) {
        if (v != 0) return false;
    }
    return true;
}

Rat RationalMatrix::trace() const {
    assert(rows_ == cols_);
    Rat t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    RationalMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j) == 0) continue;
                out.at(i, j) += aik * rhs.at(k, j);
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rat& c) const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

std::vector<Rat> RationalMatrix::operator*(const std::vector<Rat>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<Rat> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j) == 0 || v[j] == 0) continue;
            out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) {
            os << at(i, j).get_str() << (j + 1 < cols_ ? " " : "");
        }
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

Rat det_bareiss(RationalMatrix m) {
    assert(m.rows() == m.cols());
    const int n = m.rows();
    if (n == 0) return 1;

    int sign = 1;
    Rat prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Rat(-m.at(n - 1, n - 1));
}

int rank_rational(const RationalMatrix& m) {
    RationalMatrix w = m;
    const int rows = w.rows();
    const int cols = w.cols();
    std::vector<int> colperm(cols);
    for (int j = 0; j < cols; ++j) colperm[j] = j;

    int r = 0;
    Rat prev = 1;
    while (r < rows && r < cols) {
        // full pivot: first nonzero entry of the remaining block
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i) {
            for (int j = r; j < cols; ++j) {
                if (w.at(i, colperm[j]) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi < 0) break;
        if (pi != r) {
            for (int j = 0; j < cols; ++j) std::swap(w.at(r, j), w.at(pi, j));
        }
        std::swap(colperm[r], colperm[pj]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                w.at(i, colperm[j]) =
                    (w.at(r, colperm[r]) * w.at(i, colperm[j]) -
                     w.at(i, colperm[r]) * w.at(r, colperm[j])) /
                    prev;
            }
            w.at(i, colperm[r]) = 0;
        }
        prev = w.at(r, colperm[r]);
        ++r;
    }
    return r;
}

std::vector<std::vector<Rat>> nullspace_basis(const RationalMatrix& m) {
    RationalMatrix w = m;
    const int rows = w.rows();
    const int cols = w.cols();

    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (w.at(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < cols; ++j) std::swap(w.at(r, j), w.at(p, j));
        }
        Rat inv = w.at(r, c);
        for (int j = c; j < cols; ++j) w.at(r, j) /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w.at(i, c) == 0) continue;
            Rat f = w.at(i, c);
            for (int j = c; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols);
        v[free] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col_of_row.size()); ++i) {
            v[pivot_col_of_row[i]] = -w.at(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace crn
