#include "crn/selection.hpp"

#include <stdexcept>
#include <string>

#include "crn/errors.hpp"
#include "crn/stoich.hpp"

namespace crn {

Rat minor_determinant(const RationalMatrix& s, const std::vector<int>& columns,
                      std::optional<int> drop_row) {
    const int m = s.rows();
    const int want = drop_row ? m - 1 : m;
    if (static_cast<int>(columns.size()) != want) {
        throw std::invalid_argument("minor_determinant: expected " +
                                    std::to_string(want) + " columns, got " +
                                    std::to_string(columns.size()));
    }
    RationalMatrix sub(want, want);
    int r = 0;
    for (int i = 0; i < m; ++i) {
        if (drop_row && i == *drop_row) continue;
        for (int c = 0; c < want; ++c) sub.at(r, c) = s.at(i, columns[c]);
        ++r;
    }
    return det_bareiss(std::move(sub));
}

namespace {

// For each species, the reactions that consume it, in index order.
std::vector<std::vector<int>> candidate_children(const Network& net) {
    std::vector<std::vector<int>> out(net.num_species());
    for (int j = 0; j < net.num_reactions(); ++j) {
        for (const auto& [m, c] : net.reactions[j].reactants) {
            (void)c;
            out[m].push_back(j);
        }
    }
    return out;
}

struct Enumerator {
    const std::vector<std::vector<int>>& children;
    int skip;  // omitted species, or -1
    int64_t budget;
    std::vector<int> assignment;
    std::vector<char> used;
    std::vector<std::vector<int>> found;

    void run(int m) {
        if (m == static_cast<int>(assignment.size())) {
            found.push_back(assignment);
            return;
        }
        if (m == skip) {
            run(m + 1);
            return;
        }
        for (int j : children[m]) {
            if (used[j]) continue;
            if (--budget < 0) {
                throw CapExceeded("selection enumeration cap exceeded");
            }
            used[j] = 1;
            assignment[m] = j;
            run(m + 1);
            assignment[m] = -1;
            used[j] = 0;
        }
    }
};

}  // namespace

std::vector<ChildSelection> enumerate_child_selections(const Network& net,
                                                       const Limits& limits) {
    auto children = candidate_children(net);
    RationalMatrix s = stoichiometric_matrix(net);
    Enumerator en{children,
                  -1,
                  limits.max_enum_nodes,
                  std::vector<int>(net.num_species(), -1),
                  std::vector<char>(net.num_reactions(), 0),
                  {}};
    en.run(0);
    std::vector<ChildSelection> out;
    out.reserve(en.found.size());
    for (auto& a : en.found) {
        Rat alpha = minor_determinant(s, a);
        out.push_back(ChildSelection{std::move(a), std::move(alpha)});
    }
    return out;
}

std::vector<PartialChildSelection> enumerate_partial_child_selections(
    const Network& net, int omitted, const Limits& limits) {
    if (omitted < 0 || omitted >= net.num_species()) {
        throw std::invalid_argument("unknown species index " +
                                    std::to_string(omitted));
    }
    auto children = candidate_children(net);
    RationalMatrix s = stoichiometric_matrix(net);
    Enumerator en{children,
                  omitted,
                  limits.max_enum_nodes,
                  std::vector<int>(net.num_species(), -1),
                  std::vector<char>(net.num_reactions(), 0),
                  {}};
    en.run(0);
    std::vector<PartialChildSelection> out;
    out.reserve(en.found.size());
    for (auto& a : en.found) {
        std::vector<int> cols;
        cols.reserve(net.num_species() - 1);
        for (int m = 0; m < net.num_species(); ++m) {
            if (m != omitted) cols.push_back(a[m]);
        }
        Rat beta = minor_determinant(s, cols, omitted);
        out.push_back(
            PartialChildSelection{omitted, std::move(a), std::move(beta)});
    }
    return out;
}

}  // namespace crn
