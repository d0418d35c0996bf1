#pragma once

#include "polybound/errors.hpp"

namespace polybound {

inline constexpr double euler_gamma = 0.5772156649015328606065120900824024;

// Modified Bessel functions of the second kind, orders 0 and 1.
// Relative error below 1e-9 on [1e-6, 700]; returns 0 past the underflow point.
double bessel_k0(double x);
double bessel_k1(double x);

// Spectral parameter kappa > 0; energies are -kappa^2. Construction enforces
// the admitted range so every downstream routine can assume it.
class Kappa {
public:
    static constexpr double min_value = 1e-4;
    static constexpr double max_value = 50.0;

    explicit Kappa(double v);
    double value() const { return v_; }

private:
    double v_;
};

// Free-resolvent kernel at k = i*kappa: (1/2pi) K_0(kappa r) in 2d,
// exp(-kappa r)/(4 pi r) in 3d. Strictly positive, strictly decreasing in r.
double green_free(int dim, Kappa kappa, double r);

// Regularized diagonal value replacing the kernel singularity:
// 2d: -(ln(kappa/2) + gamma)/(2 pi); 3d: -kappa/(4 pi).
double xi_reg(int dim, Kappa kappa);

// rho * d/drho of the free kernel: -(kappa rho/2pi) K_1(kappa rho) in 2d,
// -exp(-kappa rho)(1 + kappa rho)/(4 pi rho) in 3d. Always negative.
double green_rad_deriv(int dim, Kappa kappa, double rho);

} // namespace polybound
