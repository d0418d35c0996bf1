#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polybound/geometry.hpp"
#include "polybound/greens.hpp"

namespace polybound {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst_violation = 0.0;
    std::string context; // parameter set of the worst case
};

struct TrialVectorParams {
    double lambda = 0.1; // decay rate of psi_j = sqrt(tanh lambda) e^(-lambda |j|)
    int window = 200;    // must satisfy e^(-2 lambda N) < 1e-12
};

// Worst violation of "f is decreasing along grid" (max positive jump).
// Exposed so tests can feed a deliberately broken function.
double scan_monotone_decreasing(const std::function<double(double)>& f,
                                const std::vector<double>& grid);

// Perturbation-matrix entries must never be positive (tolerance 1e-14).
CheckResult check_dkern_negativity(const ChainArray& chain, const std::vector<double>& kappa_grid);

// Quadratic-form gap <psi, Gamma psi> - (band-edge value) |psi|^2 for the
// exponential trial vector; negative values certify a bound state.
double trial_vector_value(const ChainArray& chain, double alpha, Kappa kappa,
                          const TrialVectorParams& params);

// g_{i kappa} strictly decreasing in |theta| on [0, pi/ell].
CheckResult check_g_monotone(int dim, Kappa kappa, double ell, int theta_points);

// 0 <= g(0) - g(theta) <= c_kappa theta^2 with c_kappa = 1/(16 pi sinh^2(kappa/2))
// at d=3, ell=1; d=2 checked for finiteness and evenness only.
CheckResult check_gbound(const std::vector<double>& kappa_list);

// Hilbert-Schmidt norm of the perturbation strictly decreasing in kappa,
// and continuous under a 1e-4 step.
CheckResult check_hs_decay(const ChainArray& chain, const std::vector<double>& kappa_list);

// Finite-array eigenvalues of the packed-block family must not increase
// when the block or the tails grow; counts below the band edge nondecreasing
// in block size.
CheckResult check_example_monotonicity(int M_max, int N_max, double alpha, int dim);

// The full suite at canonical desk-scale parameters.
std::vector<CheckResult> run_all_checks();

} // namespace polybound
