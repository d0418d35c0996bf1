#include "polybound/krein.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace polybound {

namespace {

// Pairwise distance table; degenerate separations are rejected because the
// interaction matrix entries blow up there.
Eigen::MatrixXd distance_table(const ChainArray& chain, bool reject_degenerate) {
    const int n = chain.size();
    Eigen::MatrixXd r(n, n);
    r.setZero();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double d = dist(chain.points[a], chain.points[b]);
            if (reject_degenerate && d < 1e-9 * chain.ell)
                throw param_error("matrix assembly: points " + std::to_string(chain.j_min + a) +
                                  " and " + std::to_string(chain.j_min + b) +
                                  " are closer than 1e-9*ell");
            r(a, b) = d;
            r(b, a) = d;
        }
    return r;
}

void check_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw param_error("eig_sym: matrix is not square");
    const double scale = 1.0 + m.cwiseAbs().maxCoeff();
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
        throw param_error("eig_sym: matrix is not symmetric (max asymmetry " +
                          std::to_string(asym) + ")");
}

} // namespace

GammaMatrix build_gamma(const ChainArray& chain, double alpha, Kappa kappa) {
    GammaMatrix g;
    g.dim = chain.dim;
    g.ell = chain.ell;
    g.alpha = alpha;
    g.kappa = kappa.value();
    g.j_min = chain.j_min;
    g.j_max = chain.j_max;
    const int n = chain.size();
    const Eigen::MatrixXd r = distance_table(chain, true);
    g.entries.resize(n, n);
    const double diag = alpha - xi_reg(chain.dim, kappa);
    for (int a = 0; a < n; ++a) {
        g.entries(a, a) = diag;
        for (int b = a + 1; b < n; ++b) {
            const double v = -green_free(chain.dim, kappa, r(a, b));
            g.entries(a, b) = v;
            g.entries(b, a) = v;
        }
    }
    return g;
}

PerturbationMatrix build_dmatrix(const ChainArray& chain, Kappa kappa) {
    PerturbationMatrix d;
    d.dim = chain.dim;
    d.ell = chain.ell;
    d.kappa = kappa.value();
    const int n = chain.size();
    // no straight-line-bound screening here: the comparison matrix is used
    // precisely to probe chains on either side of the straight reference
    const Eigen::MatrixXd r = distance_table(chain, true);
    d.entries.resize(n, n);
    for (int a = 0; a < n; ++a) {
        d.entries(a, a) = 0.0;
        for (int b = a + 1; b < n; ++b) {
            const double straight_d = chain.ell * (b - a);
            const double v =
                green_free(chain.dim, kappa, straight_d) - green_free(chain.dim, kappa, r(a, b));
            d.entries(a, b) = v;
            d.entries(b, a) = v;
        }
    }
    return d;
}

double hs_norm(const PerturbationMatrix& d) {
    return d.entries.norm();
}

Eigen::VectorXd eig_sym(const Eigen::MatrixXd& m) {
    check_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw numerical_error("eig_sym: eigenvalue iteration failed to converge");
    return es.eigenvalues();
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> eig_sym_vectors(const Eigen::MatrixXd& m) {
    check_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success)
        throw numerical_error("eig_sym: eigenvalue iteration failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

double lambda_min(const ChainArray& chain, double alpha, Kappa kappa) {
    const GammaMatrix g = build_gamma(chain, alpha, kappa);
    const Eigen::VectorXd ev = eig_sym(g.entries);
    return ev(0);
}

} // namespace polybound
