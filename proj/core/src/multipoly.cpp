#include "crn/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace crn {

Monomial Monomial::variable(int v, int exponent) {
    Monomial m;
    if (exponent != 0) m.exps_.emplace_back(v, exponent);
    return m;
}

Monomial Monomial::from_exponents(std::vector<std::pair<int, int>> exps) {
    std::sort(exps.begin(), exps.end());
    Monomial m;
    for (const auto& [v, e] : exps) {
        if (e == 0) continue;
        if (!m.exps_.empty() && m.exps_.back().first == v) {
            m.exps_.back().second += e;
            if (m.exps_.back().second == 0) m.exps_.pop_back();
        } else {
            m.exps_.emplace_back(v, e);
        }
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) {
        (void)v;
        d += e;
    }
    return d;
}

int Monomial::exponent(int v) const {
    for (const auto& [var, e] : exps_) {
        if (var == v) return e;
        if (var > v) break;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < other.exps_.size()) {
        if (j == other.exps_.size() ||
            (i < exps_.size() && exps_[i].first < other.exps_[j].first)) {
            out.exps_.push_back(exps_[i++]);
        } else if (i == exps_.size() ||
                   other.exps_[j].first < exps_[i].first) {
            out.exps_.push_back(other.exps_[j++]);
        } else {
            int e = exps_[i].second + other.exps_[j].second;
            if (e != 0) out.exps_.emplace_back(exps_[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < other.exps_.size()) {
        if (j == other.exps_.size() ||
            (i < exps_.size() && exps_[i].first < other.exps_[j].first)) {
            out.exps_.push_back(exps_[i++]);
        } else if (i == exps_.size() ||
                   other.exps_[j].first < exps_[i].first) {
            return std::nullopt;
        } else {
            int e = exps_[i].second - other.exps_[j].second;
            if (e < 0) return std::nullopt;
            if (e > 0) out.exps_.emplace_back(exps_[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents() == b.exponents();
}

bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

int grlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first != eb[j].first) {
            // an earlier variable with positive exponent wins lex
            return ea[i].first < eb[j].first ? 1 : -1;
        }
        if (ea[i].second != eb[j].second) {
            return ea[i].second > eb[j].second ? 1 : -1;
        }
        ++i;
        ++j;
    }
    if (i < ea.size()) return 1;
    if (j < eb.size()) return -1;
    return 0;
}

MultiPoly::MultiPoly(Rat constant) {
    if (constant != 0) terms_.emplace(Monomial(), std::move(constant));
}

MultiPoly MultiPoly::variable(int v) {
    MultiPoly p;
    p.terms_.emplace(Monomial::variable(v), Rat(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int MultiPoly::total_degree() const {
    // the leading monomial has maximal degree under a graded order
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

int MultiPoly::degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.exponent(v));
    }
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    MultiPoly out = *this;
    out += other;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    MultiPoly out = *this;
    out -= other;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& scalar) const {
    MultiPoly out;
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

MultiPoly MultiPoly::operator/(const Rat& scalar) const {
    if (scalar == 0) throw std::invalid_argument("division by zero");
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c / scalar);
    return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || it->second != jt->second) {
            return false;
        }
    }
    return true;
}

bool MultiPoly::operator!=(const MultiPoly& other) const {
    return !(*this == other);
}

Rat MultiPoly::evaluate(const std::vector<Rat>& values) const {
    Rat sum = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (const auto& [v, e] : m.exponents()) {
            if (v < 0 || static_cast<size_t>(v) >= values.size()) {
                throw std::out_of_range("unassigned variable in evaluation");
            }
            term *= pow_rat(values[v], static_cast<unsigned long>(e));
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(int v, const Rat& value) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) {
            out.add_term(m, c);
        } else {
            out.add_term(*m.divide(Monomial::variable(v, e)),
                         c * pow_rat(value, static_cast<unsigned long>(e)));
        }
    }
    return out;
}

MultiPoly operator*(const Rat& scalar, const MultiPoly& p) {
    return p * scalar;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    const auto& g_lead = *g.terms().begin();
    MultiPoly q;
    MultiPoly r = f;
    while (!r.is_zero()) {
        const auto& r_lead = *r.terms().begin();
        auto m = r_lead.first.divide(g_lead.first);
        if (!m) return std::nullopt;
        MultiPoly t;
        t.add_term(*m, r_lead.second / g_lead.second);
        q += t;
        r -= t * g;
    }
    return q;
}

Monomial monomial_content(const MultiPoly& p) {
    if (p.is_zero()) return Monomial();
    auto it = p.terms().begin();
    std::vector<std::pair<int, int>> acc = it->first.exponents();
    for (++it; it != p.terms().end() && !acc.empty(); ++it) {
        const auto& exps = it->first.exponents();
        std::vector<std::pair<int, int>> next;
        size_t i = 0, j = 0;
        while (i < acc.size() && j < exps.size()) {
            if (acc[i].first < exps[j].first) {
                ++i;
            } else if (exps[j].first < acc[i].first) {
                ++j;
            } else {
                next.emplace_back(acc[i].first,
                                  std::min(acc[i].second, exps[j].second));
                ++i;
                ++j;
            }
        }
        acc = std::move(next);
    }
    return Monomial::from_exponents(std::move(acc));
}

std::pair<MultiPoly, MultiPoly> split_linear(const MultiPoly& p, int v) {
    MultiPoly a, b;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) {
            b.add_term(m, c);
        } else if (e == 1) {
            a.add_term(*m.divide(Monomial::variable(v)), c);
        } else {
            throw std::invalid_argument("split_linear: degree above one in v");
        }
    }
    return {std::move(a), std::move(b)};
}

std::string to_string(const MultiPoly& p,
                      const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (sign(a) < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += sign(a) < 0 ? " - " : " + ";
            if (sign(a) < 0) a = -a;
        }
        out += to_string(a);
        for (const auto& [v, e] : m.exponents()) {
            out += "*";
            out += names.at(static_cast<size_t>(v));
            if (e > 1) out += "^" + std::to_string(e);
        }
        first = false;
    }
    return out;
}

}  // namespace crn
