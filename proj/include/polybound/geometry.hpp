#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "polybound/errors.hpp"

namespace polybound {

using Point = std::array<double, 3>; // z = 0 for planar chains

inline double dist(const Point& a, const Point& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Finite window of an interaction chain: points y_j for j in [j_min, j_max],
// consecutive points at distance ell, no pair farther apart than its index
// distance allows (|y_j - y_j'| <= ell |j - j'|).
struct ChainArray {
    int dim = 3; // 2 or 3
    double ell = 1.0;
    int j_min = 0;
    int j_max = 0;
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
    const Point& at(int j) const { return points[static_cast<size_t>(j - j_min)]; }

    // Throws param_error naming the offending pair when an invariant fails.
    void check() const;
};

// Tolerance for the chain invariants (relative).
inline constexpr double geometry_tol = 1e-12;

ChainArray gen_straight(int n_half, double ell, int dim);

// Two straight arms meeting at the origin with interior angle `angle`;
// angle = pi reproduces a straight chain up to rigid motion.
ChainArray gen_bent(int n_half, double ell, int dim, double angle);

// Total turning angle `turn` split evenly over `arc_edges` consecutive
// direction changes around the center; straight tails outside.
// arc_edges = 1 matches gen_bent(angle = pi - turn) up to rigid motion.
ChainArray gen_arc_chain(int n_half, double ell, int dim, int arc_edges, double turn);

// Square (2M+1)x(2M+1) lattice block traversed by a serpentine path, with
// straight tails attached at the path endpoints so the one-sided index
// extent reaches N. M = 0 gives the straight chain of 2N+1 points.
ChainArray gen_packed_block(int M, int N, double ell, int dim);

// Empirical geometric constants of a chain window.
struct AssumptionReport {
    double c1_est = 1.0;     // min |y_j - y_j'| / (ell |j - j'|)
    long sharp_pairs = 0;    // pairs strictly below the straight-line distance
    double c2_est = 0.0;     // fitted decay constant for the sector deficit
    double mu = 0.0;         // decay exponent the fit supports
    double omega = 0.5;      // sector parameter
    bool a2_satisfied = false;
    bool straight = false;
};

// Fits the straightness-deficit decay on the sector {omega <= j/j' <= 1/omega}:
// constants fitted on inner pairs (by |j + j'|) must bound the outer pairs.
AssumptionReport validate_chain(const ChainArray& chain, double omega = 0.5,
                                const std::vector<double>& mu_grid = {0.6, 0.8, 1.0, 1.5, 2.0});

// JSON geometry format: {"dim", "ell", "j_min", "points": [[x,y(,z)], ...]}.
// load_chain re-validates the invariants.
ChainArray load_chain(const std::string& path);
void save_chain(const ChainArray& chain, const std::string& path);
std::string chain_to_json(const ChainArray& chain);
ChainArray chain_from_json(const std::string& text);

} // namespace polybound
