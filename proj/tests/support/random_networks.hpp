#pragma once

#include <string>
#include <vector>

#include <crn/network.hpp>
#include <crn/oracle.hpp>
#include <crn/rng.hpp>
#include <crn/stoich.hpp>

namespace testsupport {

// Random network with at most max_m species and max_e reactions and
// stoichiometric coefficients in {1,2,3}. Each species joins each
// side of each reaction with probability 1/3, so inflows, outflows,
// and catalytic reactions all occur.
inline crn::Network random_network(crn::SplitMix64& rng, int max_m = 5,
                                   int max_e = 12) {
    static const std::string kNames[] = {"A", "B", "C", "D", "E"};
    crn::Network net;
    net.name = "random";
    const int m = static_cast<int>(rng.uniform(1, max_m));
    const int e = static_cast<int>(rng.uniform(1, max_e));
    for (int i = 0; i < m; ++i) net.species.push_back(kNames[i]);
    for (int j = 0; j < e; ++j) {
        crn::Reaction rx;
        rx.label = std::to_string(j + 1);
        for (int i = 0; i < m; ++i) {
            if (rng.uniform(0, 2) == 0) {
                rx.reactants[i] = crn::rat(static_cast<long>(rng.uniform(1, 3)));
            }
            if (rng.uniform(0, 2) == 0) {
                rx.products[i] = crn::rat(static_cast<long>(rng.uniform(1, 3)));
            }
        }
        net.reactions.push_back(std::move(rx));
    }
    return net;
}

// Strictly positive total assignment of the network's rate variables.
inline crn::RateInstance random_instance(const crn::Network& net,
                                         crn::SplitMix64& rng) {
    const auto vars = crn::rate_variables(net);
    crn::RateInstance inst;
    inst.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        inst.push_back(crn::random_positive_rational(rng));
    }
    return inst;
}

}  // namespace testsupport
