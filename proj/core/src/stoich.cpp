#include "crn/stoich.hpp"

#include "crn/simplex.hpp"

namespace crn {

bool operator==(const RateVar& a, const RateVar& b) {
    return a.reaction == b.reaction && a.species == b.species;
}

bool operator<(const RateVar& a, const RateVar& b) {
    if (a.reaction != b.reaction) return a.reaction < b.reaction;
    return a.species < b.species;
}

RationalMatrix stoichiometric_matrix(const Network& net) {
    RationalMatrix s(net.num_species(), net.num_reactions());
    for (int j = 0; j < net.num_reactions(); ++j) {
        const Reaction& rx = net.reactions[j];
        for (const auto& [m, c] : rx.reactants) s.at(m, j) -= c;
        for (const auto& [m, c] : rx.products) s.at(m, j) += c;
    }
    return s;
}

std::vector<RateVar> rate_variables(const Network& net) {
    std::vector<RateVar> vars;
    for (int j = 0; j < net.num_reactions(); ++j) {
        for (const auto& [m, c] : net.reactions[j].reactants) {
            (void)c;
            vars.push_back(RateVar{j, m});
        }
    }
    return vars;
}

std::string rate_var_name(const Network& net, const RateVar& v) {
    return "r[" + net.reactions[v.reaction].label + "," +
           net.species[v.species] + "]";
}

std::optional<std::vector<Rat>> positive_kernel_vector(const Network& net) {
    RationalMatrix s = stoichiometric_matrix(net);
    const int e = s.cols();
    // Substitute v = w + 1 to turn {S v = 0, v >= 1} into {S w = -S 1, w >= 0}.
    std::vector<Rat> b(s.rows());
    for (int i = 0; i < s.rows(); ++i) {
        Rat row_sum = 0;
        for (int j = 0; j < e; ++j) row_sum += s.at(i, j);
        b[i] = -row_sum;
    }
    auto w = feasible_point(s, b);
    if (!w) return std::nullopt;
    std::vector<Rat> v(e);
    for (int j = 0; j < e; ++j) v[j] = (*w)[j] + 1;
    return v;
}

}  // namespace crn
