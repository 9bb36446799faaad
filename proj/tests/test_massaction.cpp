#include <doctest.h>

#include <stdexcept>

#include <crn/mass_action.hpp>
#include <crn/network.hpp>
#include <crn/oracle.hpp>
#include <crn/ratmat.hpp>
#include <crn/stoich.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_networks.hpp"

using namespace crn;

namespace {

MassActionInstance ones_instance(const Network& net) {
    return {std::vector<Rat>(net.num_reactions(), Rat(1)),
            std::vector<Rat>(net.num_species(), Rat(1))};
}

}  // namespace

TEST_CASE("rates multiply constants by reactant powers") {
    Network net = parse_network_file(testsupport::fixture("obstructed-4sp.crn"));
    MassActionInstance inst = ones_instance(net);
    inst.x = {Rat(2), Rat(3), Rat(5), Rat(7)};  // A,B,C,D
    auto r = ma_rates(net, inst);
    REQUIRE(r.size() == 6);
    CHECK(r[0] == 6);    // k1 xA xB
    CHECK(r[1] == 4);    // k2 xA^2
    CHECK(r[2] == 3);    // k3 xB
    CHECK(r[3] == 5);    // k4 xC
    CHECK(r[4] == 105);  // k5 xB xC xD
    CHECK(r[5] == 1);    // constant feed
}

TEST_CASE("instance validation") {
    Network net = parse_network_file(testsupport::fixture("obstructed-4sp.crn"));
    MassActionInstance short_k{{Rat(1)}, std::vector<Rat>(4, Rat(1))};
    CHECK_THROWS_AS((void)ma_rates(net, short_k), std::invalid_argument);
    MassActionInstance neg = ones_instance(net);
    neg.x[2] = Rat(-1);
    CHECK_THROWS_AS((void)ma_rates(net, neg), std::invalid_argument);
    MassActionInstance zero_k = ones_instance(net);
    zero_k.k[0] = 0;
    CHECK_THROWS_AS((void)ma_rates(net, zero_k), std::invalid_argument);

    Network frac = parse_network("1: 1/2 A -> B\n");
    MassActionInstance fi{{Rat(1)}, {Rat(1), Rat(1)}};
    CHECK_THROWS_AS((void)ma_rates(frac, fi), std::domain_error);
}

TEST_CASE("derivative vector satisfies the euler identity") {
    SplitMix64 rng(67);
    for (int i = 0; i < 100; ++i) {
        Network net = testsupport::random_network(rng);
        MassActionInstance inst;
        for (int j = 0; j < net.num_reactions(); ++j) {
            inst.k.push_back(random_positive_rational(rng));
        }
        for (int m = 0; m < net.num_species(); ++m) {
            inst.x.push_back(random_positive_rational(rng));
        }
        CHECK(oracles::mass_action_derivatives_consistent(net, inst));
    }
}

TEST_CASE("derivatives feed the jacobian consistently") {
    Network net = parse_network_file(testsupport::fixture("obstructed-4sp.crn"));
    MassActionInstance inst = ones_instance(net);
    RateInstance derivs = ma_jacobian_rates(net, inst);
    // at all-ones, r[j,m] = s^j_m
    auto vars = rate_variables(net);
    for (std::size_t v = 0; v < vars.size(); ++v) {
        CHECK(derivs[v] ==
              net.reactions[vars[v].reaction].reactant_coeff(vars[v].species));
    }
}

TEST_CASE("the four-species net has an equilibrium with nonzero det") {
    Network net = parse_network_file(testsupport::fixture("obstructed-4sp.crn"));
    EquilibriumCheck chk = check_equilibrium(net, ones_instance(net));
    for (const auto& r : chk.residual) CHECK(r == 0);
    CHECK(chk.report.determinant == -3);
    CHECK(chk.report.algebraic_multiplicity_zero == 0);

    // nudging one concentration breaks the balance
    MassActionInstance off = ones_instance(net);
    off.x[0] = Rat(2);
    EquilibriumCheck bad = check_equilibrium(net, off);
    bool all_zero = true;
    for (const auto& r : bad.residual) {
        if (r != 0) all_zero = false;
    }
    CHECK(!all_zero);
}

TEST_CASE("the six-species net is singular at its special instance") {
    Network net = parse_network_file(testsupport::fixture("massaction-6sp.crn"));
    MassActionInstance inst = ones_instance(net);
    auto k3 = net.reaction_index("3");
    REQUIRE(k3.has_value());
    inst.k[*k3] = Rat(2);
    EquilibriumCheck chk = check_equilibrium(net, inst);
    for (const auto& r : chk.residual) CHECK(r == 0);
    CHECK(chk.report.determinant == 0);
    CHECK(chk.report.algebraic_multiplicity_zero == 2);
    CHECK(chk.report.geometric_multiplicity_zero == 1);
}

TEST_CASE("probe finds singular equilibria only where they exist") {
    Network six = parse_network_file(testsupport::fixture("massaction-6sp.crn"));
    ProbeResult hit = probe_singular_equilibrium(six, 0, 100);
    REQUIRE(hit.witness.has_value());
    // validate the witness end to end
    EquilibriumCheck chk = check_equilibrium(six, *hit.witness);
    for (const auto& r : chk.residual) CHECK(r == 0);
    CHECK(chk.report.determinant == 0);
    for (const auto& v : hit.witness->k) CHECK(v > 0);
    for (const auto& v : hit.witness->x) CHECK(v > 0);

    Network four = parse_network_file(testsupport::fixture("obstructed-4sp.crn"));
    ProbeResult miss = probe_singular_equilibrium(four, 0, 500);
    CHECK(!miss.witness.has_value());
    CHECK(miss.tried == 500);
    // the net is balanced, so every concentration sample extends to an
    // equilibrium; none of them is singular
    CHECK(miss.equilibria_found == 500);

    Network trimmed =
        parse_network_file(testsupport::fixture("obstructed-3sp-core.crn"));
    ProbeResult none = probe_singular_equilibrium(trimmed, 0, 50);
    CHECK(!none.witness.has_value());
    CHECK(none.equilibria_found == 0);  // no positive equilibria at all
}

TEST_CASE("probe is deterministic for a fixed seed") {
    Network six = parse_network_file(testsupport::fixture("massaction-6sp.crn"));
    ProbeResult a = probe_singular_equilibrium(six, 9, 100);
    ProbeResult b = probe_singular_equilibrium(six, 9, 100);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->k == b.witness->k);
    CHECK(a.witness->x == b.witness->x);
}
