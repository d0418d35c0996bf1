#include "polybound/greens.hpp"

#include <cmath>
#include <string>

namespace polybound {

namespace {

constexpr double two_pi = 6.283185307179586476925287;
constexpr double four_pi = 12.56637061435917295385057;

template <size_t N>
double eval_poly(const double (&c)[N], double x) {
    double r = c[N - 1];
    for (size_t i = N - 1; i > 0; --i)
        r = r * x + c[i - 1];
    return r;
}

// Minimax rational approximations for K_0 and K_1 after Russon & Blair
// (Chalk River AECL-3461, 1969), coefficients as tabulated in Boost.Math.
// Small-x branch is rational in y = x^2 with an explicit log term; large-x
// branch is exp(-x)/sqrt(x) times a rational in 1/x.

const double k0_p1[] = {
    2.4708152720399552679e+03, 5.9169059852270512312e+03, 4.6850901201934832188e+02,
    1.1999463724910714109e+01, 1.3166052564989571850e-01, 5.8599221412826100000e-04};
const double k0_q1[] = {2.1312714303849120380e+04, -2.4994418972832303646e+02, 1.0};
const double k0_p2[] = {
    -1.6128136304458193998e+06, -3.7333769444840079748e+05, -1.7984434409411765813e+04,
    -2.9501657892958843865e+02, -1.6414452837299064100e+00};
const double k0_q2[] = {
    -1.6128136304458193998e+06, 2.9865713163054025489e+04, -2.5064972445877992730e+02, 1.0};
const double k0_p3[] = {
    1.1600249425076035558e+02, 2.3444738764199315021e+03, 1.8321525870183537725e+04,
    7.1557062783764037541e+04, 1.5097646353289914539e+05, 1.7398867902565686251e+05,
    1.0577068948034021957e+05, 3.1075408980684392399e+04, 3.6832589957340267940e+03,
    1.1394980557384778174e+02};
const double k0_q3[] = {
    9.2556599177304839811e+01, 1.8821890840982713696e+03, 1.4847228371802360957e+04,
    5.8824616785857027752e+04, 1.2689839587977598727e+05, 1.5144644673520157801e+05,
    9.7418829762268075784e+04, 3.1474655750295278825e+04, 4.4329628889746408858e+03,
    2.0013443064949242491e+02, 1.0};

const double k1_p1[] = {
    -2.2149374878243304548e+06, 7.1938920065420586101e+05, 1.7733324035147015630e+05,
    7.1885382604084798576e+03, 9.9991373567429309922e+01, 4.8127070456878442310e-01};
const double k1_q1[] = {
    -2.2149374878243304548e+06, 3.7264298672067697862e+04, -2.8143915754538725829e+02, 1.0};
const double k1_p2[] = {
    0.0, -1.3531161492785421328e+06, -1.4758069205414222471e+05,
    -4.5051623763436087023e+03, -5.3103913335180275253e+01, -2.2795590826955002390e-01};
const double k1_q2[] = {
    -2.7062322985570842656e+06, 4.3117653211351080007e+04, -3.0507151578787595807e+02, 1.0};
const double k1_p3[] = {
    2.2196792496874548962e+00, 4.4137176114230414036e+01, 3.4122953486801312910e+02,
    1.3319486433183221990e+03, 2.8590657697910288226e+03, 3.4540675585544584407e+03,
    2.3123742209168871550e+03, 8.1094256146537402173e+02, 1.3182609918569941308e+02,
    7.5584584631176030810e+00, 6.4257745859173138767e-02};
const double k1_q3[] = {
    1.7710478032601086579e+00, 3.4552228452758912848e+01, 2.5951223655579051357e+02,
    9.6929165726802648634e+02, 1.9448440788918006154e+03, 2.1181000487171943810e+03,
    1.2082692316002348638e+03, 3.3031020088765390854e+02, 3.6001069306861518855e+01, 1.0};

// exp(-x) underflows past ~745; the supported domain ends at 700.
constexpr double underflow_x = 705.0;

void require_positive(double x, const char* fn) {
    if (!(x > 0.0))
        throw param_error(std::string(fn) + ": argument must be positive, got " + std::to_string(x));
}

} // namespace

double bessel_k0(double x) {
    require_positive(x, "bessel_k0");
    if (x > underflow_x)
        return 0.0;
    if (x <= 1.0) {
        const double y = x * x;
        const double r1 = eval_poly(k0_p1, y) / eval_poly(k0_q1, y);
        const double r2 = eval_poly(k0_p2, y) / eval_poly(k0_q2, y);
        return r1 - std::log(x) * r2;
    }
    const double y = 1.0 / x;
    const double r = eval_poly(k0_p3, y) / eval_poly(k0_q3, y);
    return std::exp(-x) / std::sqrt(x) * r;
}

double bessel_k1(double x) {
    require_positive(x, "bessel_k1");
    if (x > underflow_x)
        return 0.0;
    if (x <= 1.0) {
        const double y = x * x;
        const double r1 = eval_poly(k1_p1, y) / eval_poly(k1_q1, y);
        const double r2 = eval_poly(k1_p2, y) / eval_poly(k1_q2, y);
        return (r1 + std::log(x) * r2) / x;
    }
    const double y = 1.0 / x;
    const double r = eval_poly(k1_p3, y) / eval_poly(k1_q3, y);
    return std::exp(-x) / std::sqrt(x) * r;
}

Kappa::Kappa(double v) : v_(v) {
    if (!(v >= min_value && v <= max_value))
        throw param_error("kappa = " + std::to_string(v) + " outside the admitted range [" +
                          std::to_string(min_value) + ", " + std::to_string(max_value) + "]");
}

namespace {

void require_dim(int dim, const char* fn) {
    if (dim != 2 && dim != 3)
        throw param_error(std::string(fn) + ": dim must be 2 or 3, got " + std::to_string(dim));
}

} // namespace

double green_free(int dim, Kappa kappa, double r) {
    require_dim(dim, "green_free");
    require_positive(r, "green_free");
    const double k = kappa.value();
    if (dim == 2)
        return bessel_k0(k * r) / two_pi;
    return std::exp(-k * r) / (four_pi * r);
}

double xi_reg(int dim, Kappa kappa) {
    require_dim(dim, "xi_reg");
    const double k = kappa.value();
    if (dim == 2)
        return -(std::log(k / 2.0) + euler_gamma) / two_pi;
    return -k / four_pi;
}

double green_rad_deriv(int dim, Kappa kappa, double rho) {
    require_dim(dim, "green_rad_deriv");
    require_positive(rho, "green_rad_deriv");
    const double k = kappa.value();
    if (dim == 2)
        return -(k * rho / two_pi) * bessel_k1(k * rho);
    return -std::exp(-k * rho) * (1.0 + k * rho) / (four_pi * rho);
}

} // namespace polybound
