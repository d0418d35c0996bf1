#include <cmath>
#include <vector>

#include <doctest.h>

#include "polybound/krein.hpp"
#include "polybound/lattice.hpp"
#include "polybound/solver.hpp"

using namespace polybound;

namespace {
constexpr double pi = 3.141592653589793238462643;

ChainArray two_points() {
    ChainArray c;
    c.dim = 3;
    c.ell = 1.0;
    c.j_min = 0;
    c.j_max = 1;
    c.points = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
    return c;
}
} // namespace

TEST_CASE("single point array reproduces the textbook level") {
    const ChainArray pt = gen_packed_block(0, 0, 1.0, 3);
    const auto spec = finite_array_spectrum(pt, -0.5);
    REQUIRE(spec.size() == 1);
    // kappa0 = -4 pi alpha = 2 pi, energy -4 pi^2
    CHECK(spec[0].first == doctest::Approx(-4.0 * pi * pi).epsilon(1e-8));
    CHECK(spec[0].second == 1);

    CHECK(finite_array_spectrum(pt, 0.0).empty());
    CHECK(finite_array_spectrum(pt, 0.5).empty());
}

TEST_CASE("two-point array solves the classic transcendental equation") {
    // lower branch zero of kappa = exp(-kappa): Lambert W(1)
    const auto spec = finite_array_spectrum(two_points(), 0.0);
    REQUIRE(spec.size() == 1);
    CHECK(spec[0].second == 1);
    const double kappa0 = std::sqrt(-spec[0].first);
    CHECK(kappa0 == doctest::Approx(0.5671432904097838730).epsilon(1e-10));
    CHECK(spec[0].first == doctest::Approx(-0.3216515118568364480).epsilon(1e-10));
}

TEST_CASE("3x3 block spectrum with degeneracies") {
    const ChainArray block = gen_packed_block(1, 1, 1.0, 3);
    REQUIRE(block.size() == 9);
    const auto spec = finite_array_spectrum(block, -0.5);
    REQUIRE(spec.size() == 6);

    const double energies[] = {-39.5469288334, -39.5115074068, -39.4783738659,
                               -39.4759802, -39.4451445598, -39.4142212182};
    const int mults[] = {1, 2, 1, 2, 2, 1};
    for (int i = 0; i < 6; ++i) {
        CHECK(spec[i].first == doctest::Approx(energies[i]).epsilon(1e-6));
        CHECK(spec[i].second == mults[i]);
    }
    // exactly one level below the infinite straight chain's band bottom
    const double e_lower = band_edges(3, -0.5, 1.0).E_lower;
    CHECK(e_lower == doctest::Approx(-39.525234504157538).epsilon(1e-12));
    int below = 0;
    for (const auto& [e, m] : spec)
        if (e < e_lower)
            below += m;
    CHECK(below == 1);
}

TEST_CASE("straight windows carry no bound state") {
    const ChainArray s = gen_straight(100, 1.0, 3);
    for (double alpha : {-0.5, 0.0, 0.5})
        CHECK(find_bound_states(s, alpha, 100, 10.0).empty());
}

TEST_CASE("right-angle chain binds one state") {
    const ChainArray bent = gen_bent(200, 1.0, 3, pi / 2.0);
    const auto states = find_bound_states(bent, 0.0, 200, 2.0);
    REQUIRE(states.size() == 1);
    const BoundState& st = states[0];

    CHECK(st.kappa0 == doctest::Approx(0.9777589759254).epsilon(1e-9));
    CHECK(st.energy == doctest::Approx(-st.kappa0 * st.kappa0).epsilon(1e-15));
    CHECK(st.branch_index == 0);
    CHECK(st.multiplicity == 1);
    CHECK(st.window == 200);
    CHECK(st.below_threshold);
    CHECK(st.kappa0 > band_edges(3, 0.0, 1.0).kappa_thr);

    // coefficients: unit norm, mirror-symmetric, concentrated at the corner
    // (the largest charge sits on the sites adjacent to the vertex)
    REQUIRE(st.coeffs.size() == 401);
    CHECK(st.coeffs.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(st.coeffs(200) > 0.25);
    int arg_max = 0;
    st.coeffs.maxCoeff(&arg_max);
    CHECK(std::abs(arg_max - 200) <= 2);
    for (int j = 1; j <= 200; ++j)
        CHECK(std::abs(st.coeffs(200 + j) - st.coeffs(200 - j)) <= 1e-8);

    // the coefficient vector really spans the kernel at kappa0
    ChainArray sub = gen_bent(200, 1.0, 3, pi / 2.0);
    const GammaMatrix g = build_gamma(sub, 0.0, Kappa(st.kappa0));
    CHECK((g.entries * st.coeffs).norm() <= 1e-8 * g.entries.norm());

    // nested-window trace ends at the full window and is already converged
    REQUIRE(!st.kappa0_convergence.empty());
    CHECK(st.kappa0_convergence.back().first == 200);
    CHECK(st.kappa0_convergence.back().second == st.kappa0);
    CHECK(st.kappa0_convergence.front().first == 50);
    CHECK(st.kappa0_convergence.front().second ==
          doctest::Approx(0.9777589755649).epsilon(1e-9));
}

TEST_CASE("find_bound_states parameter guards") {
    const ChainArray bent = gen_bent(50, 1.0, 3, pi / 2.0);
    CHECK_THROWS_AS(find_bound_states(bent, 0.0, 60, 2.0), param_error);
    CHECK_THROWS_AS(find_bound_states(bent, 0.0, 0, 2.0), param_error);
    // kappa_max below the spectral threshold cannot bracket anything
    CHECK_THROWS_AS(find_bound_states(bent, 0.0, 50, 0.9), param_error);
    CHECK_THROWS_AS(find_bound_states(bent, 0.0, 50, 51.0), param_error);
    // kappa_max too small to reach the root: bracket failure, not a parameter error
    CHECK_THROWS_AS(find_bound_states(bent, 0.0, 50, 0.97), numerical_error);
}

TEST_CASE("denser packing binds more") {
    // equal windows over the tails of two packings of different size
    const auto one = find_bound_states(gen_packed_block(1, 2, 1.0, 3), 0.0, 5, 2.0);
    const auto two = find_bound_states(gen_packed_block(2, 2, 1.0, 3), 0.0, 5, 2.0);
    REQUIRE(one.size() == 1);
    REQUIRE(two.size() == 1);
    CHECK(two.size() >= one.size());
    CHECK(one[0].kappa0 == doctest::Approx(1.22246327).epsilon(1e-6));
    CHECK(two[0].kappa0 == doctest::Approx(1.19459145).epsilon(1e-6));
}

TEST_CASE("block with tails binds a ladder of states") {
    const auto one = find_bound_states(gen_packed_block(1, 30, 1.0, 3), 0.0, 33, 2.0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].kappa0 == doctest::Approx(1.2272440727).epsilon(1e-6));

    const auto two = find_bound_states(gen_packed_block(2, 30, 1.0, 3), 0.0, 33, 2.0);
    REQUIRE(two.size() == 4);
    const double roots[] = {1.3749886495, 1.1622951577, 1.1369300838, 0.9634007477};
    for (int i = 0; i < 4; ++i) {
        CHECK(two[i].kappa0 == doctest::Approx(roots[i]).epsilon(1e-6));
        CHECK(two[i].below_threshold);
        CHECK(two[i].multiplicity == 1);
    }
    // energies come out ascending
    for (size_t i = 0; i + 1 < two.size(); ++i)
        CHECK(two[i].energy < two[i + 1].energy);
}

TEST_CASE("bound-state function evaluation") {
    const ChainArray bent = gen_bent(40, 1.0, 3, pi / 2.0);
    const auto states = find_bound_states(bent, 0.0, 40, 2.0);
    REQUIRE(states.size() == 1);
    const BoundState& st = states[0];

    // chain is mirror symmetric about the y axis; so is the function
    const auto pair = eigenfunction_eval(st, bent, {{0.4, 0.9, 0.0}, {-0.4, 0.9, 0.0}});
    CHECK(pair[0] == doctest::Approx(pair[1]).epsilon(1e-8));
    CHECK(pair[0] > 0.0);

    // decay along the ray opposite the opening of the bend
    const auto ray =
        eigenfunction_eval(st, bent, {{0.0, -1.0, 0.0}, {0.0, -2.0, 0.0}, {0.0, -3.0, 0.0}});
    CHECK(ray[0] > ray[1]);
    CHECK(ray[1] > ray[2]);
    CHECK(ray[2] > 0.0);

    // evaluation on top of an interaction point is rejected by name
    try {
        eigenfunction_eval(st, bent, {bent.at(0)});
        FAIL("expected rejection at the singularity");
    } catch (const param_error& e) {
        CHECK(std::string(e.what()).find("0") != std::string::npos);
    }

    // coefficient vector must match the window it came from
    BoundState shrunk = st;
    shrunk.window = 20;
    CHECK_THROWS_AS(eigenfunction_eval(shrunk, bent, {{0.0, -1.0, 0.0}}), param_error);
}

TEST_CASE("window convergence of the deepest root") {
    const ChainArray bent = gen_bent(100, 1.0, 3, pi / 2.0);
    const auto rows = convergence_study(bent, 0.0, {25, 50, 100});
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.found);
        CHECK(r.monotone);
    }
    CHECK(rows[0].increment == 0.0);
    CHECK(rows[1].increment > 0.0);
    CHECK(rows[2].increment <= rows[1].increment);
    CHECK(rows[1].kappa0 == doctest::Approx(0.9777589755649).epsilon(1e-9));
    CHECK(rows[2].kappa0 == doctest::Approx(0.9777589759254).epsilon(1e-9));

    // straight chain: no branch ever dips below zero
    const auto empty_rows = convergence_study(gen_straight(50, 1.0, 3), 0.0, {10, 20, 40});
    REQUIRE(empty_rows.size() == 3);
    for (const auto& r : empty_rows)
        CHECK_FALSE(r.found);

    CHECK_THROWS_AS(convergence_study(bent, 0.0, {50, 25}), param_error);
    CHECK_THROWS_AS(convergence_study(bent, 0.0, {}), param_error);
}
