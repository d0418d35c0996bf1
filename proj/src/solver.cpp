#include "polybound/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "polybound/krein.hpp"
#include "polybound/lattice.hpp"

namespace polybound {

namespace {

// Principal sub-chain with labels in [-window, window].
ChainArray restrict_window(const ChainArray& chain, int window) {
    if (window < 1)
        throw param_error("window must be >= 1");
    if (chain.j_min > -window || chain.j_max < window)
        throw param_error("window " + std::to_string(window) +
                          " exceeds the available chain labels [" + std::to_string(chain.j_min) +
                          ", " + std::to_string(chain.j_max) + "]");
    ChainArray sub;
    sub.dim = chain.dim;
    sub.ell = chain.ell;
    sub.j_min = -window;
    sub.j_max = window;
    const int off = -window - chain.j_min;
    sub.points.assign(chain.points.begin() + off, chain.points.begin() + off + 2 * window + 1);
    return sub;
}

Eigen::VectorXd gamma_eigs(const ChainArray& chain, double alpha, double kappa) {
    return eig_sym(build_gamma(chain, alpha, Kappa(kappa)).entries);
}

double branch_value(const ChainArray& chain, double alpha, double kappa, int branch) {
    return gamma_eigs(chain, alpha, kappa)(branch);
}

// Eigenvalue branches rise with kappa; bisect the bracketing interval where
// branch flips from negative to non-negative.
double bisect_branch(const ChainArray& chain, double alpha, int branch, double lo, double hi) {
    double f_lo = branch_value(chain, alpha, lo, branch);
    if (f_lo >= 0.0)
        return lo;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * (1.0 + mid) || mid == lo || mid == hi)
            return mid;
        const double f_mid = branch_value(chain, alpha, mid, branch);
        if (f_mid < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

constexpr int samples_per_decade = 64;

// Roots of all eigenvalue branches that start negative at kappa_lo, walking a
// log-spaced sample grid until every such branch has turned positive.
std::vector<std::pair<int, double>> branch_roots(const ChainArray& chain, double alpha,
                                                 double kappa_lo, double kappa_max) {
    Eigen::VectorXd ev_lo = gamma_eigs(chain, alpha, kappa_lo);
    std::vector<int> pending;
    for (int i = 0; i < ev_lo.size(); ++i)
        if (ev_lo(i) < 0.0)
            pending.push_back(i);
    std::vector<std::pair<int, double>> roots;
    if (pending.empty())
        return roots;

    const double decades = std::log10(kappa_max / kappa_lo);
    const int n_steps = std::max(1, static_cast<int>(std::ceil(samples_per_decade * decades)));
    const double ratio = std::pow(kappa_max / kappa_lo, 1.0 / n_steps);

    double k_prev = kappa_lo;
    for (int s = 1; s <= n_steps && !pending.empty(); ++s) {
        const double k = (s == n_steps) ? kappa_max : kappa_lo * std::pow(ratio, s);
        const Eigen::VectorXd ev = gamma_eigs(chain, alpha, k);
        for (auto it = pending.begin(); it != pending.end();) {
            const int b = *it;
            if (ev(b) >= 0.0) {
                roots.emplace_back(b, bisect_branch(chain, alpha, b, k_prev, k));
                it = pending.erase(it);
            } else {
                ++it;
            }
        }
        k_prev = k;
    }
    if (!pending.empty())
        throw numerical_error("eigenvalue branch " + std::to_string(pending.front()) +
                              " is still negative at kappa_max = " + std::to_string(kappa_max) +
                              "; increase kappa_max");
    return roots;
}

// Merge branch roots that coincide within the degeneracy threshold.
struct Cluster {
    double kappa0;
    int branch;
    int multiplicity;
};

std::vector<Cluster> cluster_roots(std::vector<std::pair<int, double>> roots) {
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<Cluster> out;
    size_t i = 0;
    while (i < roots.size()) {
        size_t j = i + 1;
        double sum = roots[i].second;
        int branch = roots[i].first;
        while (j < roots.size() && roots[j].second - roots[j - 1].second <= 1e-8) {
            sum += roots[j].second;
            branch = std::min(branch, roots[j].first);
            ++j;
        }
        out.push_back({sum / (j - i), branch, static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

Eigen::VectorXd null_coeffs(const ChainArray& chain, double alpha, double kappa0, int branch) {
    const GammaMatrix g = build_gamma(chain, alpha, Kappa(kappa0));
    const auto [vals, vecs] = eig_sym_vectors(g.entries);
    Eigen::VectorXd c = vecs.col(branch);
    c.normalize();
    const double peak = c.cwiseAbs().maxCoeff();
    for (int i = 0; i < c.size(); ++i)
        if (std::abs(c(i)) > 1e-8 * peak) {
            if (c(i) < 0.0)
                c = -c;
            break;
        }
    const double residual = (g.entries * c).norm();
    if (residual > 1e-8 * g.entries.norm())
        throw numerical_error("bound-state residual " + std::to_string(residual) +
                              " exceeds tolerance; root refinement failed");
    return c;
}

} // namespace

std::vector<BoundState> find_bound_states(const ChainArray& chain, double alpha, int window,
                                          double kappa_max) {
    const ChainArray sub = restrict_window(chain, window);
    const BandStructure bs = band_edges(chain.dim, alpha, chain.ell);
    const double kappa_lo = bs.kappa_thr * (1.0 + 1e-6);
    if (!(kappa_max > kappa_lo))
        throw param_error("kappa_max must exceed the spectral threshold " +
                          std::to_string(bs.kappa_thr));
    if (kappa_max > Kappa::max_value)
        throw param_error("kappa_max exceeds the admitted range (max " +
                          std::to_string(Kappa::max_value) + ")");

    const auto clusters = cluster_roots(branch_roots(sub, alpha, kappa_lo, kappa_max));

    std::vector<BoundState> states;
    for (const auto& cl : clusters) {
        BoundState st;
        st.kappa0 = cl.kappa0;
        st.energy = -cl.kappa0 * cl.kappa0;
        st.branch_index = cl.branch;
        st.multiplicity = cl.multiplicity;
        st.window = window;
        st.below_threshold = cl.kappa0 > bs.kappa_thr;
        st.coeffs = null_coeffs(sub, alpha, cl.kappa0, cl.branch);

        // cheap nested-window trace of the same branch, ending at the full root
        for (int w : {window / 4, window / 2}) {
            if (w < 1 || w >= window)
                continue;
            const ChainArray sw = restrict_window(chain, w);
            if (cl.branch >= sw.size())
                continue;
            try {
                const auto sub_roots = branch_roots(sw, alpha, kappa_lo, kappa_max);
                for (const auto& r : sub_roots)
                    if (r.first == cl.branch)
                        st.kappa0_convergence.emplace_back(w, r.second);
            } catch (const numerical_error&) {
                // branch not bracketed at this window: omit the pair
            }
        }
        st.kappa0_convergence.emplace_back(window, cl.kappa0);
        states.push_back(std::move(st));
    }
    std::sort(states.begin(), states.end(),
              [](const BoundState& a, const BoundState& b) { return a.energy < b.energy; });
    return states;
}

std::vector<std::pair<double, int>> finite_array_spectrum(const ChainArray& chain, double alpha) {
    const double kappa_lo = Kappa::min_value;
    const Eigen::VectorXd ev_lo = gamma_eigs(chain, alpha, kappa_lo);
    std::vector<int> candidates;
    for (int i = 0; i < ev_lo.size(); ++i)
        if (ev_lo(i) < 0.0)
            candidates.push_back(i);
    if (candidates.empty())
        return {};

    double kappa_max = 1.0;
    for (;;) {
        const Eigen::VectorXd ev = gamma_eigs(chain, alpha, kappa_max);
        bool all_positive = true;
        for (int b : candidates)
            if (ev(b) < 0.0)
                all_positive = false;
        if (all_positive)
            break;
        if (kappa_max >= Kappa::max_value)
            throw numerical_error("some eigenvalue branch stays negative up to kappa = " +
                                  std::to_string(Kappa::max_value) +
                                  "; state lies outside the admitted range");
        kappa_max = std::min(2.0 * kappa_max, Kappa::max_value);
    }

    std::vector<std::pair<int, double>> roots;
    for (int b : candidates)
        roots.emplace_back(b, bisect_branch(chain, alpha, b, kappa_lo, kappa_max));
    std::vector<std::pair<double, int>> out;
    for (const auto& cl : cluster_roots(std::move(roots)))
        out.emplace_back(-cl.kappa0 * cl.kappa0, cl.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> eigenfunction_eval(const BoundState& state, const ChainArray& chain,
                                       const std::vector<Point>& points) {
    const ChainArray sub = restrict_window(chain, state.window);
    if (state.coeffs.size() != sub.size())
        throw param_error("coefficient vector does not match the state's window");
    const Kappa kappa(state.kappa0);
    std::vector<double> values;
    values.reserve(points.size());
    for (const auto& x : points) {
        double v = 0.0;
        for (int a = 0; a < sub.size(); ++a) {
            const double r = dist(x, sub.points[a]);
            if (r < 1e-6 * sub.ell)
                throw param_error("evaluation point coincides with chain point " +
                                  std::to_string(sub.j_min + a) +
                                  " (distance below 1e-6*ell); the function is singular there");
            v += state.coeffs(a) * green_free(sub.dim, kappa, r);
        }
        values.push_back(v);
    }
    return values;
}

std::vector<ConvergenceRow> convergence_study(const ChainArray& chain, double alpha,
                                              const std::vector<int>& windows) {
    if (windows.empty())
        throw param_error("convergence_study: windows must not be empty");
    for (size_t i = 0; i + 1 < windows.size(); ++i)
        if (windows[i] >= windows[i + 1])
            throw param_error("convergence_study: windows must be strictly ascending");

    const BandStructure bs = band_edges(chain.dim, alpha, chain.ell);
    const double kappa_lo = bs.kappa_thr * (1.0 + 1e-6);

    std::vector<ConvergenceRow> rows;
    double prev_kappa = std::numeric_limits<double>::quiet_NaN();
    double prev_inc = std::numeric_limits<double>::quiet_NaN();
    for (int w : windows) {
        ConvergenceRow row;
        row.window = w;
        const ChainArray sub = restrict_window(chain, w);
        if (branch_value(sub, alpha, kappa_lo, 0) >= 0.0) {
            row.found = false;
            rows.push_back(row);
            continue;
        }
        double kappa_max = std::min(std::max(1.0, 2.0 * bs.kappa_thr), Kappa::max_value);
        while (branch_value(sub, alpha, kappa_max, 0) < 0.0) {
            if (kappa_max >= Kappa::max_value)
                throw numerical_error("lowest branch stays negative up to kappa = " +
                                      std::to_string(Kappa::max_value));
            kappa_max = std::min(2.0 * kappa_max, Kappa::max_value);
        }
        row.found = true;
        row.kappa0 = bisect_branch(sub, alpha, 0, kappa_lo, kappa_max);
        if (!std::isnan(prev_kappa)) {
            row.increment = std::abs(row.kappa0 - prev_kappa);
            row.monotone = std::isnan(prev_inc) || row.increment <= prev_inc;
            prev_inc = row.increment;
        }
        prev_kappa = row.kappa0;
        rows.push_back(row);
    }
    return rows;
}

} // namespace polybound
