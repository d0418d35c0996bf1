#pragma once

#include <Eigen/Dense>
#include <utility>

#include "polybound/geometry.hpp"
#include "polybound/greens.hpp"

namespace polybound {

// Truncated Krein matrix over a chain window: diagonal alpha - xi_reg,
// off-diagonal -green_free(dim, kappa, |y_j - y_j'|).
struct GammaMatrix {
    int dim = 3;
    double ell = 1.0;
    double alpha = 0.0;
    double kappa = 0.0;
    int j_min = 0;
    int j_max = 0;
    Eigen::MatrixXd entries;
};

// Entrywise difference between the chain matrix and the straight-chain
// matrix on the same window: zero diagonal, all entries <= 0 for chains
// satisfying the geometric bound.
struct PerturbationMatrix {
    int dim = 3;
    double ell = 1.0;
    double kappa = 0.0;
    Eigen::MatrixXd entries;
};

GammaMatrix build_gamma(const ChainArray& chain, double alpha, Kappa kappa);
PerturbationMatrix build_dmatrix(const ChainArray& chain, Kappa kappa);

// Frobenius norm of the truncated perturbation.
double hs_norm(const PerturbationMatrix& d);

// Eigenvalues of a real symmetric matrix, ascending. Rejects matrices that
// are not symmetric within 1e-12 relative.
Eigen::VectorXd eig_sym(const Eigen::MatrixXd& m);

// Same, with orthonormal eigenvectors as columns.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> eig_sym_vectors(const Eigen::MatrixXd& m);

// Smallest eigenvalue of the chain's Krein matrix.
double lambda_min(const ChainArray& chain, double alpha, Kappa kappa);

} // namespace polybound
