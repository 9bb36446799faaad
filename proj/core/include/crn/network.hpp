#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

// One reaction: positive stoichiometric coefficients on each side,
// keyed by species index. An empty reactant side is an inflow, an
// empty product side an outflow.
struct Reaction {
    std::string label;
    std::map<int, Rat> reactants;
    std::map<int, Rat> products;

    bool is_inflow() const { return reactants.empty(); }
    bool is_outflow() const { return products.empty(); }
    Rat reactant_coeff(int species) const;
    Rat product_coeff(int species) const;
};

bool operator==(const Reaction& a, const Reaction& b);

struct Network {
    std::string name;
    std::vector<std::string> species;
    std::vector<Reaction> reactions;

    int num_species() const { return static_cast<int>(species.size()); }
    int num_reactions() const { return static_cast<int>(reactions.size()); }
    std::optional<int> species_index(std::string_view name) const;
    std::optional<int> reaction_index(std::string_view label) const;
};

bool operator==(const Network& a, const Network& b);

// Parses the reaction-list format: optional `network "name"` and
// `species A, B, C` headers, then one `label: side -> side` line per
// reaction, where a side is "0" or a +-separated list of
// [coefficient] species terms. "#" starts a comment. Throws
// ParseError with line/column on malformed input.
Network parse_network(std::string_view text);
Network parse_network_file(const std::string& path);

// Canonical text form; parse_network(pretty_print(n)) == n.
std::string pretty_print(const Network& net);

}  // namespace crn
