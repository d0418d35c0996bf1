#pragma once

#include <utility>

#include "polybound/greens.hpp"

namespace polybound {

// Straight-chain band data in energy units hbar^2/2m = 1.
struct BandStructure {
    int dim = 3;
    double alpha = 0.0;
    double ell = 1.0;
    double kappa_thr = 0.0; // root of the theta = 0 edge equation
    double E_lower = 0.0;   // -kappa_thr^2
    double E_upper = 0.0;   // min(0, edge energy at theta = pi/ell)
    bool overlapping = false; // no positive root at theta = pi/ell
};

// Regularized lattice sum g_{i kappa}(theta) on the Brillouin zone
// [-pi/ell, pi/ell]. 3d has the closed form
// -(1/4 pi ell) ln(2 (cosh(kappa ell) - cos(theta ell)));
// 2d is an accelerated series, absolute accuracy 1e-10.
double g_theta(int dim, Kappa kappa, double theta, double ell);

// Independent oracle for g_theta: direct real-space sum
// sum_{j != 0} G_{i kappa}(ell j) cos(j ell theta) minus the regularizer
// ((1/2pi) ln kappa in 2d, kappa/4pi in 3d), truncated below 1e-12.
double g_theta_poisson(int dim, Kappa kappa, double theta, double ell);

// Band edges from the fiber equations
//   3d: alpha = g_{i kappa}(theta_edge)
//   2d: alpha + (gamma - ln 2)/2pi = g_{i kappa}(theta_edge)
// solved by bracketed bisection; overlapping = true when the upper-edge
// equation has no positive root.
BandStructure band_edges(int dim, double alpha, double ell);

// Spectrum interval of the straight-chain Krein matrix at fixed kappa:
// [alpha + delta2 - g(0), alpha + delta2 - g(pi/ell)] with
// delta2 = (gamma - ln 2)/2pi in 2d and 0 in 3d.
std::pair<double, double> straight_gamma_interval(int dim, double alpha, double ell, Kappa kappa);

} // namespace polybound
