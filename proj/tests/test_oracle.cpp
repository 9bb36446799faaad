#include <doctest.h>

#include <stdexcept>

#include <crn/network.hpp>
#include <crn/oracle.hpp>
#include <crn/ratmat.hpp>
#include <crn/sym_matrix.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_networks.hpp"

using namespace crn;

TEST_CASE("faddeev-leverrier on a known matrix") {
    RationalMatrix a{{2, 1}, {0, 3}};
    auto [cp, adj] = faddeev_leverrier(a);
    // det(tI - A) = t^2 - 5t + 6
    REQUIRE(cp.size() == 2);
    CHECK(cp[0] == 6);
    CHECK(cp[1] == -5);
    CHECK(adj == RationalMatrix{{3, -1}, {0, 2}});
}

TEST_CASE("spectral report at the known singular instance") {
    Network net = parse_network_file(testsupport::fixture("obstructed-4sp.crn"));
    // r[1,A] = 2, every other rate variable 1: puts det at zero
    RateInstance inst{Rat(2), Rat(1), Rat(1), Rat(1),
                      Rat(1), Rat(1), Rat(1), Rat(1)};
    SpectralReport rep = spectral_report(net, inst);
    REQUIRE(rep.char_poly.size() == 4);
    CHECK(rep.char_poly[0] == 0);
    CHECK(rep.char_poly[1] == 0);
    CHECK(rep.char_poly[2] == 3);
    CHECK(rep.char_poly[3] == 4);
    CHECK(rep.determinant == 0);
    CHECK(rep.algebraic_multiplicity_zero == 2);
    CHECK(rep.geometric_multiplicity_zero == 1);
    CHECK(rep.rank == 3);
    // adjugate: only the A-row survives
    RationalMatrix want{{0, -1, -1, 2},
                        {0, 0, 0, 0},
                        {0, 0, 0, 0},
                        {0, 0, 0, 0}};
    CHECK(rep.adjugate == want);
}

TEST_CASE("spectral report at the all-ones instance") {
    Network net = parse_network_file(testsupport::fixture("obstructed-4sp.crn"));
    RateInstance ones(8, Rat(1));
    SpectralReport rep = spectral_report(net, ones);
    CHECK(rep.determinant == -1);
    CHECK(rep.algebraic_multiplicity_zero == 0);
    CHECK(rep.geometric_multiplicity_zero == 0);
    CHECK(rep.rank == 4);
}

TEST_CASE("jacobian_at validates the instance") {
    Network net = parse_network_file(testsupport::fixture("obstructed-4sp.crn"));
    CHECK_THROWS_AS((void)jacobian_at(net, RateInstance(3, Rat(1))),
                    std::invalid_argument);
    RateInstance bad(8, Rat(1));
    bad[4] = 0;
    CHECK_THROWS_AS((void)jacobian_at(net, bad), std::invalid_argument);
    bad[4] = Rat(-1);
    CHECK_THROWS_AS((void)jacobian_at(net, bad), std::invalid_argument);
}

TEST_CASE("numeric adjugate and determinant satisfy their identities") {
    SplitMix64 rng(53);
    for (int i = 0; i < 200; ++i) {
        Network net = testsupport::random_network(rng);
        RateInstance inst = testsupport::random_instance(net, rng);
        RationalMatrix g = jacobian_at(net, inst);
        auto [cp, adj] = faddeev_leverrier(g);
        const int n = g.rows();

        Rat det = det_bareiss(g);
        CHECK(det == oracles::perm_det(g));
        CHECK(cp[0] == (n % 2 == 0 ? det : -det));

        RationalMatrix should_be_scaled_id = g * adj;
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                CHECK(should_be_scaled_id.at(r, c) == (r == c ? det : Rat(0)));
            }
        }
    }
}

TEST_CASE("symbolic evaluation matches the numeric pass") {
    SplitMix64 rng(59);
    for (int i = 0; i < 60; ++i) {
        Network net = testsupport::random_network(rng, 4, 8);
        RateInstance inst = testsupport::random_instance(net, rng);
        SymMatrix gs = sym_jacobian(net);
        RationalMatrix g = jacobian_at(net, inst);
        CHECK(evaluate(gs, inst) == g);

        auto [cp, adj] = faddeev_leverrier(g);
        auto cps = char_poly_symbolic(gs);
        for (std::size_t k = 0; k < cp.size(); ++k) {
            CHECK(cps[k].evaluate(inst) == cp[k]);
        }
        SymMatrix adjs = adjugate_symbolic(gs);
        CHECK(evaluate(adjs, inst) == adj);
        CHECK(det_direct(gs).evaluate(inst) == det_bareiss(g));
    }
}

TEST_CASE("rank, multiplicities, and the adjugate trichotomy") {
    SplitMix64 rng(61);
    for (int i = 0; i < 200; ++i) {
        Network net = testsupport::random_network(rng);
        RateInstance inst = testsupport::random_instance(net, rng);
        SpectralReport rep = spectral_report(net, inst);
        const int n = net.num_species();

        RationalMatrix g = jacobian_at(net, inst);
        CHECK(rep.rank == oracles::echelon_rank(g));
        CHECK(rep.geometric_multiplicity_zero == n - rep.rank);
        CHECK(rep.geometric_multiplicity_zero <= rep.algebraic_multiplicity_zero);

        int adj_rank = rank_rational(rep.adjugate);
        if (rep.rank == n) {
            CHECK(adj_rank == n);
        } else if (rep.rank == n - 1) {
            CHECK(adj_rank == 1);
        } else {
            CHECK(adj_rank == 0);
        }

        // kernel dimension cross-check
        CHECK(static_cast<int>(nullspace_basis(g).size()) ==
              rep.geometric_multiplicity_zero);
    }
}
