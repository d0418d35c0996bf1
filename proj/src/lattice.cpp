#include "polybound/lattice.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace polybound {

namespace {

constexpr double pi = 3.141592653589793238462643;
constexpr double two_pi = 2.0 * pi;
constexpr double four_pi = 4.0 * pi;
constexpr double ln2 = 0.6931471805599453094172321;

void require_ell(double ell) {
    if (!(ell > 0.0))
        throw param_error("ell must be positive, got " + std::to_string(ell));
}

void require_zone(double theta, double ell) {
    if (std::abs(theta) > pi / ell * (1.0 + 1e-12))
        throw param_error("theta = " + std::to_string(theta) +
                          " outside the Brillouin zone [-pi/ell, pi/ell]");
}

// 2d lattice sum by pairing the +/-n terms against their 1/n asymptote,
// which turns the conditionally convergent limit into an O(n^-3) series;
// the subtracted harmonic part resums to the Euler constant. A constant
// -(1/2pi) ln(4 pi / ell) aligns the normalization with the real-space sum
// regularized by (1/2pi) ln kappa (the convention every band-edge and
// Krein-matrix identity here relies on; cross-checked by g_theta_poisson).
double g2_series(double kappa, double theta, double ell) {
    const double b = theta * ell / two_pi;
    const double c = kappa * ell / two_pi;
    double sum = 0.5 / std::hypot(b, c) + euler_gamma - std::log(four_pi / ell);
    double tail = 0.0;
    for (int n = 1;; ++n) {
        const double t = 0.5 / std::hypot(n + b, c) + 0.5 / std::hypot(n - b, c) - 1.0 / n;
        sum += t;
        if (n >= 8 && std::abs(t) < 1e-13) {
            // midpoint estimate of the remaining O(n^-3) tail
            tail = t * static_cast<double>(n) * n * n / (2.0 * (n + 0.5) * (n + 0.5));
            break;
        }
    }
    return (sum + tail) / two_pi;
}

double g3_closed(double kappa, double theta, double ell) {
    return -std::log(2.0 * (std::cosh(kappa * ell) - std::cos(theta * ell))) / (four_pi * ell);
}

// delta2: the constant shift in every 2d fiber equation.
double edge_shift(int dim) {
    return dim == 2 ? (euler_gamma - ln2) / two_pi : 0.0;
}

// Edge function alpha + delta2 - g_{i kappa}(theta_edge); increasing in kappa.
double edge_value(int dim, double alpha, double ell, double kappa, double theta) {
    return alpha + edge_shift(dim) - g_theta(dim, Kappa(kappa), theta, ell);
}

double bisect_edge(int dim, double alpha, double ell, double theta, double lo, double hi) {
    double flo = edge_value(dim, alpha, ell, lo, theta);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi || (hi - lo) <= 1e-14 * mid)
            break;
        const double fm = edge_value(dim, alpha, ell, mid, theta);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double g_theta(int dim, Kappa kappa, double theta, double ell) {
    require_ell(ell);
    require_zone(theta, ell);
    if (dim == 2)
        return g2_series(kappa.value(), theta, ell);
    if (dim == 3)
        return g3_closed(kappa.value(), theta, ell);
    throw param_error("g_theta: dim must be 2 or 3");
}

double g_theta_poisson(int dim, Kappa kappa, double theta, double ell) {
    require_ell(ell);
    require_zone(theta, ell);
    const double k = kappa.value();
    double sum = 0.0;
    if (dim == 3) {
        const double q = std::exp(-k * ell);
        for (long j = 1;; ++j) {
            const double g = std::exp(-k * ell * j) / (four_pi * ell * j);
            sum += 2.0 * g * std::cos(j * ell * theta);
            if (g / (1.0 - q) < 1e-13)
                break;
        }
        return sum - k / four_pi;
    }
    if (dim == 2) {
        const double q = std::exp(-k * ell);
        for (long j = 1;; ++j) {
            const double g = bessel_k0(k * ell * j) / two_pi;
            sum += 2.0 * g * std::cos(j * ell * theta);
            if (g / (1.0 - q) < 1e-13)
                break;
        }
        return sum - std::log(k) / two_pi;
    }
    throw param_error("g_theta_poisson: dim must be 2 or 3");
}

BandStructure band_edges(int dim, double alpha, double ell) {
    require_ell(ell);
    if (dim != 2 && dim != 3)
        throw param_error("band_edges: dim must be 2 or 3");

    BandStructure bs;
    bs.dim = dim;
    bs.alpha = alpha;
    bs.ell = ell;

    const double k_lo = Kappa::min_value;
    const double k_cap = Kappa::max_value;

    // theta = 0 edge: the edge function goes to -inf as kappa -> 0+ and to
    // +inf as kappa grows, so doubling the upper end finds a bracket.
    double hi = 1.0;
    while (edge_value(dim, alpha, ell, hi, 0.0) < 0.0) {
        if (hi >= k_cap)
            throw numerical_error("band_edges: threshold above the admitted kappa range");
        hi = std::min(2.0 * hi, k_cap);
    }
    if (edge_value(dim, alpha, ell, k_lo, 0.0) >= 0.0)
        throw numerical_error("band_edges: threshold below the admitted kappa range");
    bs.kappa_thr = bisect_edge(dim, alpha, ell, 0.0, k_lo, hi);
    bs.E_lower = -bs.kappa_thr * bs.kappa_thr;

    // theta = pi/ell edge: no positive root means the bands overlap.
    const double theta_up = pi / ell;
    if (edge_value(dim, alpha, ell, k_lo, theta_up) >= 0.0) {
        bs.overlapping = true;
        bs.E_upper = 0.0;
        return bs;
    }
    hi = 1.0;
    while (edge_value(dim, alpha, ell, hi, theta_up) < 0.0) {
        if (hi >= k_cap)
            throw numerical_error("band_edges: upper edge above the admitted kappa range");
        hi = std::min(2.0 * hi, k_cap);
    }
    const double k_up = bisect_edge(dim, alpha, ell, theta_up, k_lo, hi);
    bs.overlapping = false;
    bs.E_upper = -k_up * k_up;
    return bs;
}

std::pair<double, double> straight_gamma_interval(int dim, double alpha, double ell, Kappa kappa) {
    require_ell(ell);
    const double d2 = edge_shift(dim);
    const double lower = alpha + d2 - g_theta(dim, kappa, 0.0, ell);
    const double upper = alpha + d2 - g_theta(dim, kappa, pi / ell, ell);
    return {lower, upper};
}

} // namespace polybound
