#include <cmath>

#include <doctest.h>

#include "polybound/lattice.hpp"

using namespace polybound;

namespace {
constexpr double pi = 3.141592653589793238462643;
}

TEST_CASE("3d lattice sum closed form") {
    CHECK(g_theta(3, Kappa(1.0), 0.0, 1.0) ==
          doctest::Approx(-0.0065770548841998301).epsilon(1e-13));
    CHECK(g_theta(3, Kappa(1.0), pi, 1.0) ==
          doctest::Approx(-0.1294346175957815225).epsilon(1e-13));
}

TEST_CASE("2d lattice sum against 40-digit reference values") {
    // frozen from an extended-precision evaluation of the accelerated series
    CHECK(g_theta(2, Kappa(1.0), 0.0, 1.0) ==
          doctest::Approx(0.18665760577325165333).epsilon(5e-10));
    CHECK(g_theta(2, Kappa(1.0), pi, 1.0) ==
          doctest::Approx(-0.10614792488188893122).epsilon(5e-10));
    CHECK(g_theta(2, Kappa(0.5), 1.3, 1.0) ==
          doctest::Approx(0.055775365612198070463).epsilon(5e-10));
    CHECK(g_theta(2, Kappa(2.0), 2.2, 0.7) ==
          doctest::Approx(-0.12151685964562110252).epsilon(5e-10));
    CHECK(g_theta(2, Kappa(50.0), 0.0, 1.0) ==
          doctest::Approx(-0.62261779880310194417).epsilon(5e-10));
}

TEST_CASE("dual oracle: accelerated series vs real-space sum") {
    for (double kappa : {0.5, 1.0, 2.0})
        for (int i = 0; i <= 20; ++i) {
            const double theta = pi * i / 20.0;
            const double a = g_theta(2, Kappa(kappa), theta, 1.0);
            const double b = g_theta_poisson(2, Kappa(kappa), theta, 1.0);
            CHECK(std::abs(a - b) <= 1e-8);
        }
    // 3d: the real-space sum must reproduce the closed form as well
    for (double theta : {0.0, 1.0, pi}) {
        const double a = g_theta(3, Kappa(1.0), theta, 1.0);
        const double b = g_theta_poisson(3, Kappa(1.0), theta, 1.0);
        CHECK(std::abs(a - b) <= 1e-10);
    }
}

TEST_CASE("brillouin zone boundary enforced") {
    CHECK_NOTHROW(g_theta(3, Kappa(1.0), pi, 1.0));
    CHECK_NOTHROW(g_theta(3, Kappa(1.0), -pi, 1.0));
    CHECK_THROWS_AS(g_theta(3, Kappa(1.0), pi * 1.001, 1.0), param_error);
    CHECK_THROWS_AS(g_theta(2, Kappa(1.0), 2.0 * pi, 1.5), param_error);
    CHECK_THROWS_AS(g_theta(3, Kappa(1.0), 0.0, -1.0), param_error);
}

TEST_CASE("3d band threshold matches the closed form") {
    for (double alpha : {-0.5, -0.2, 0.0, 0.2, 0.5})
        for (double ell : {0.5, 1.0, 2.0}) {
            const BandStructure bs = band_edges(3, alpha, ell);
            const double exact =
                (2.0 / ell) * std::asinh(0.5 * std::exp(-2.0 * pi * alpha * ell));
            CHECK(std::abs(bs.kappa_thr / exact - 1.0) <= 1e-10);
            CHECK(bs.E_lower == doctest::Approx(-exact * exact).epsilon(1e-10));
        }
}

TEST_CASE("3d band edges, frozen values") {
    const BandStructure a = band_edges(3, 0.0, 1.0);
    CHECK(a.kappa_thr == doctest::Approx(0.962423650119206895).epsilon(1e-12));
    CHECK(a.E_lower == doctest::Approx(-0.92625928230877757).epsilon(1e-12));
    CHECK(a.overlapping);
    CHECK(a.E_upper == 0.0);

    const BandStructure b = band_edges(3, -0.2, 1.0);
    CHECK_FALSE(b.overlapping);
    CHECK(b.kappa_thr == doctest::Approx(2.6585260454917642).epsilon(1e-12));
    CHECK(b.E_lower == doctest::Approx(-7.0677607345580777).epsilon(1e-12));
    CHECK(b.E_upper == doctest::Approx(-5.4151775044683559).epsilon(1e-12));

    const BandStructure c = band_edges(3, -0.5, 1.0);
    CHECK(c.kappa_thr == doctest::Approx(6.2869097738203256).epsilon(1e-12));
    CHECK(c.E_lower == doctest::Approx(-39.525234504157538).epsilon(1e-12));
}

TEST_CASE("band overlap flips at alpha ell = -(ln 2)/2pi") {
    const double boundary = -std::log(2.0) / (2.0 * pi);
    CHECK(band_edges(3, boundary + 1e-6, 1.0).overlapping);
    CHECK_FALSE(band_edges(3, boundary - 1e-6, 1.0).overlapping);
    // and with the scale folded into ell
    CHECK(band_edges(3, (boundary + 1e-6) / 2.0, 2.0).overlapping);
    CHECK_FALSE(band_edges(3, (boundary - 1e-6) / 2.0, 2.0).overlapping);
}

TEST_CASE("2d band edges, frozen values") {
    const BandStructure a = band_edges(2, 0.0, 1.0);
    CHECK(a.kappa_thr == doctest::Approx(1.6722988859655365693).epsilon(1e-10));
    CHECK(a.E_lower == doctest::Approx(-2.7965835640015746824).epsilon(1e-10));
    CHECK(a.overlapping);

    const BandStructure b = band_edges(2, -0.2, 1.0);
    CHECK(b.kappa_thr == doctest::Approx(4.0324351933339230405).epsilon(1e-10));
    CHECK(b.E_lower == doctest::Approx(-16.260533588437993289).epsilon(1e-10));
    CHECK_FALSE(b.overlapping);
    CHECK(b.E_upper == doctest::Approx(-14.77207760345727674).epsilon(1e-10));
}

TEST_CASE("2d threshold approaches the single-point value for wide spacing") {
    // isolated 2d point interaction at alpha = 0 binds at kappa = 2 e^{-gamma}
    const BandStructure bs = band_edges(2, 0.0, 8.0);
    CHECK(bs.kappa_thr == doctest::Approx(1.1229189671337703396).epsilon(5e-4));
}

TEST_CASE("straight-chain spectral interval") {
    const auto [lo, hi] = straight_gamma_interval(3, 0.0, 1.0, Kappa(1.0));
    CHECK(lo == doctest::Approx(0.0065770548841998301).epsilon(1e-13));
    CHECK(hi == doctest::Approx(0.12943461759578152).epsilon(1e-13));
    CHECK(lo < hi);
}

TEST_CASE("band_edges rejects bad parameters") {
    CHECK_THROWS_AS(band_edges(1, 0.0, 1.0), param_error);
    CHECK_THROWS_AS(band_edges(3, 0.0, 0.0), param_error);
    // strongly attractive: threshold above the admitted kappa range
    CHECK_THROWS_AS(band_edges(3, -5.0, 1.0), numerical_error);
    // strongly repulsive: threshold below the admitted kappa range
    CHECK_THROWS_AS(band_edges(3, 2.0, 1.0), numerical_error);
}
