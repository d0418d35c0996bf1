#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "polybound/geometry.hpp"
#include "polybound/greens.hpp"

namespace polybound {

// A root kappa0 of an eigenvalue branch of the Krein matrix: bound state
// with energy -kappa0^2 and coefficient vector spanning the null space.
struct BoundState {
    double kappa0 = 0.0;
    double energy = 0.0;
    int branch_index = 0;
    int multiplicity = 1;
    Eigen::VectorXd coeffs; // unit norm, first significant component positive
    int window = 0;
    std::vector<std::pair<int, double>> kappa0_convergence; // (window, kappa0)
    bool below_threshold = false;
};

// Bound states of the infinite chain approximated on the window [-N, N]:
// for every branch negative just above the band-edge threshold and positive
// at kappa_max, locate its zero by bisection. Roots of distinct branches
// within 1e-8 merge into one state with higher multiplicity; results sorted
// by energy ascending. Straight chains produce an empty list.
std::vector<BoundState> find_bound_states(const ChainArray& chain, double alpha,
                                          int window, double kappa_max);

// The chain window treated as a complete finite array (no truncation error):
// every zero of every eigenvalue branch over kappa in (1e-4, kappa_max],
// kappa_max auto-doubled until all branches are positive. Returns
// (energy, multiplicity) sorted by energy ascending.
std::vector<std::pair<double, int>> finite_array_spectrum(const ChainArray& chain, double alpha);

// Pointwise values of the (unnormalized) bound-state function
// psi(x) = sum_j c_j G_{i kappa0}(|x - y_j|) over the state's window.
// Evaluation points must stay at least 1e-6 * ell away from every chain point.
std::vector<double> eigenfunction_eval(const BoundState& state, const ChainArray& chain,
                                       const std::vector<Point>& where);

struct ConvergenceRow {
    int window = 0;
    bool found = false;
    double kappa0 = 0.0;
    double increment = 0.0; // |kappa0(N) - kappa0(N_prev)|, 0 for the first row
    bool monotone = true;   // increments non-increasing so far
};

// Root of the deepest state per window; reports Cauchy increments between
// consecutive windows and flags non-monotone behavior.
std::vector<ConvergenceRow> convergence_study(const ChainArray& chain, double alpha,
                                              const std::vector<int>& windows);

} // namespace polybound
