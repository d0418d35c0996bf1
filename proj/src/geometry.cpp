#include "polybound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace polybound {

namespace {

constexpr double pi = 3.141592653589793238462643;

std::string pair_str(int j, int jp) {
    return "(" + std::to_string(j) + "," + std::to_string(jp) + ")";
}

void require_basic(int n_half, double ell, int dim, const char* fn) {
    if (n_half < 1)
        throw param_error(std::string(fn) + ": n_half must be >= 1");
    if (!(ell > 0.0))
        throw param_error(std::string(fn) + ": ell must be positive");
    if (dim != 2 && dim != 3)
        throw param_error(std::string(fn) + ": dim must be 2 or 3");
}

} // namespace

void ChainArray::check() const {
    if (dim != 2 && dim != 3)
        throw param_error("chain: dim must be 2 or 3");
    if (!(ell > 0.0))
        throw param_error("chain: ell must be positive");
    const int n = size();
    if (n == 0)
        throw param_error("chain: no points");
    if (j_max - j_min + 1 != n)
        throw param_error("chain: index window does not match the point count");
    for (int a = 0; a + 1 < n; ++a) {
        const double d = dist(points[a], points[a + 1]);
        if (std::abs(d - ell) > geometry_tol * ell)
            throw param_error("chain: neighbor distance violated at pair " +
                              pair_str(j_min + a, j_min + a + 1) + ": |dy| = " + std::to_string(d) +
                              ", ell = " + std::to_string(ell));
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const double d = dist(points[a], points[b]);
            const double cap = ell * (b - a);
            if (d > cap * (1.0 + geometry_tol))
                throw param_error("chain: straight-line bound violated at pair " +
                                  pair_str(j_min + a, j_min + b) + ": |dy| = " + std::to_string(d) +
                                  " > ell|j-j'| = " + std::to_string(cap));
            if (d < geometry_tol * ell)
                throw param_error("chain: coincident points at pair " + pair_str(j_min + a, j_min + b));
        }
    }
}

ChainArray gen_straight(int n_half, double ell, int dim) {
    require_basic(n_half, ell, dim, "gen_straight");
    ChainArray c;
    c.dim = dim;
    c.ell = ell;
    c.j_min = -n_half;
    c.j_max = n_half;
    c.points.reserve(2 * n_half + 1);
    for (int j = -n_half; j <= n_half; ++j)
        c.points.push_back({j * ell, 0.0, 0.0});
    return c;
}

ChainArray gen_bent(int n_half, double ell, int dim, double angle) {
    require_basic(n_half, ell, dim, "gen_bent");
    if (!(angle > 0.0 && angle <= pi))
        throw param_error("gen_bent: angle must lie in (0, pi], got " + std::to_string(angle));
    const double s = std::sin(angle / 2.0), co = std::cos(angle / 2.0);
    ChainArray c;
    c.dim = dim;
    c.ell = ell;
    c.j_min = -n_half;
    c.j_max = n_half;
    c.points.reserve(2 * n_half + 1);
    for (int j = -n_half; j <= n_half; ++j) {
        const double r = std::abs(j) * ell;
        const double sj = j >= 0 ? s : -s;
        c.points.push_back({r * sj, r * co, 0.0});
    }
    return c;
}

ChainArray gen_arc_chain(int n_half, double ell, int dim, int arc_edges, double turn) {
    require_basic(n_half, ell, dim, "gen_arc_chain");
    if (arc_edges < 1)
        throw param_error("gen_arc_chain: arc_edges must be >= 1");
    if (std::abs(turn) >= pi)
        throw param_error("gen_arc_chain: |turn| must be below pi to keep long chains injective");
    if (n_half < arc_edges)
        throw param_error("gen_arc_chain: n_half must be >= arc_edges so the bend fits the window");

    // Heading changes by turn/arc_edges when an edge starts at one of the
    // arc_edges central vertices.
    const int v0 = -(arc_edges / 2);
    const double step = turn / arc_edges;
    auto heading = [&](int j) {
        int crossed = std::clamp(j - v0 + 1, 0, arc_edges);
        return step * crossed;
    };

    ChainArray c;
    c.dim = dim;
    c.ell = ell;
    c.j_min = -n_half;
    c.j_max = n_half;
    c.points.resize(2 * n_half + 1);
    Point p = {0.0, 0.0, 0.0};
    c.points[0] = p;
    for (int j = -n_half; j < n_half; ++j) {
        const double phi = heading(j);
        p[0] += ell * std::cos(phi);
        p[1] += ell * std::sin(phi);
        c.points[static_cast<size_t>(j + 1 + n_half)] = p;
    }
    // center the chain on y_0 for a deterministic, window-independent layout
    const Point origin = c.at(0);
    for (auto& q : c.points) {
        q[0] -= origin[0];
        q[1] -= origin[1];
    }
    return c;
}

ChainArray gen_packed_block(int M, int N, double ell, int dim) {
    if (M < 0)
        throw param_error("gen_packed_block: M must be >= 0");
    if (N < M)
        throw param_error("gen_packed_block: N must be >= M");
    if (!(ell > 0.0))
        throw param_error("gen_packed_block: ell must be positive");
    if (dim != 2 && dim != 3)
        throw param_error("gen_packed_block: dim must be 2 or 3");

    // Serpentine through the (2M+1)^2 block from corner (-M,-M) to corner
    // (M,M); straight tails leave those corners along the x axis until the
    // one-sided extent reaches N. The path center lands exactly on (0,0).
    std::vector<std::array<int, 2>> cells;
    cells.reserve((2 * M + 1) * (2 * M + 1) + 2 * (N - M));
    for (int t = N - M; t >= 1; --t)
        cells.push_back({-M - t, -M});
    for (int b = -M; b <= M; ++b) {
        if ((b + M) % 2 == 0)
            for (int a = -M; a <= M; ++a)
                cells.push_back({a, b});
        else
            for (int a = M; a >= -M; --a)
                cells.push_back({a, b});
    }
    for (int t = 1; t <= N - M; ++t)
        cells.push_back({M + t, M});

    ChainArray c;
    c.dim = dim;
    c.ell = ell;
    const int n = static_cast<int>(cells.size());
    c.j_min = -(n - 1) / 2;
    c.j_max = (n - 1) / 2;
    c.points.reserve(cells.size());
    for (const auto& ab : cells)
        c.points.push_back({ab[0] * ell, ab[1] * ell, 0.0});
    return c;
}

AssumptionReport validate_chain(const ChainArray& chain, double omega,
                                const std::vector<double>& mu_grid) {
    if (!(omega > 0.0 && omega < 1.0))
        throw param_error("validate_chain: omega must lie in (0,1)");
    if (mu_grid.empty())
        throw param_error("validate_chain: mu_grid must not be empty");
    chain.check();

    AssumptionReport rep;
    rep.omega = omega;

    const int n = chain.size();
    struct SectorPair {
        double deficit;
        double s; // |j + j'|
    };
    std::vector<SectorPair> sector;
    double c1 = 1.0;
    long sharp = 0;
    double s_max = 0.0;
    for (int a = 0; a < n; ++a) {
        const int j = chain.j_min + a;
        for (int b = a + 1; b < n; ++b) {
            const int jp = chain.j_min + b;
            const double straight_d = chain.ell * (b - a);
            const double d = dist(chain.points[a], chain.points[b]);
            c1 = std::min(c1, d / straight_d);
            const double deficit = straight_d - d;
            if (deficit > geometry_tol * straight_d)
                ++sharp;
            if (j != 0 && jp != 0 && (j > 0) == (jp > 0)) {
                const double ratio = static_cast<double>(j) / jp;
                if (ratio >= omega && ratio <= 1.0 / omega) {
                    const double s = std::abs(static_cast<double>(j) + jp);
                    sector.push_back({std::max(deficit, 0.0), s});
                    s_max = std::max(s_max, s);
                }
            }
        }
    }
    rep.c1_est = c1;
    rep.sharp_pairs = sharp;
    rep.straight = (sharp == 0);

    // Fit the deficit bound c2 (1 + |j+j'|^(2mu))^(-1/2) on the inner half of
    // the sector, then demand it continues to hold on the outer half. The
    // window only supports an estimate, never the asymptotic statement itself.
    const double h_split = s_max / 2.0;
    const double slack_abs = 1e-12 * chain.ell;
    auto weight = [](double s, double mu) { return std::sqrt(1.0 + std::pow(s, 2.0 * mu)); };

    bool found = false;
    double best_mu = 0.0;
    double least_violation = std::numeric_limits<double>::infinity();
    double fallback_mu = mu_grid.front();
    for (double mu : mu_grid) {
        double c2_inner = 0.0;
        for (const auto& p : sector)
            if (p.s <= h_split)
                c2_inner = std::max(c2_inner, p.deficit * weight(p.s, mu));
        double worst = 0.0;
        for (const auto& p : sector)
            if (p.s > h_split) {
                const double bound = c2_inner / weight(p.s, mu) * (1.0 + 1e-9) + slack_abs;
                worst = std::max(worst, p.deficit - bound);
            }
        if (worst <= 0.0 && mu > 0.5) {
            found = true;
            best_mu = mu; // grid scanned ascending: keep the strongest decay
        }
        if (worst < least_violation) {
            least_violation = worst;
            fallback_mu = mu;
        }
    }
    rep.a2_satisfied = found;
    rep.mu = found ? best_mu : fallback_mu;
    double c2_full = 0.0;
    for (const auto& p : sector)
        c2_full = std::max(c2_full, p.deficit * weight(p.s, rep.mu));
    rep.c2_est = c2_full;
    return rep;
}

std::string chain_to_json(const ChainArray& chain) {
    nlohmann::json j;
    j["dim"] = chain.dim;
    j["ell"] = chain.ell;
    j["j_min"] = chain.j_min;
    auto pts = nlohmann::json::array();
    for (const auto& p : chain.points) {
        if (chain.dim == 2)
            pts.push_back({p[0], p[1]});
        else
            pts.push_back({p[0], p[1], p[2]});
    }
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

ChainArray chain_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw param_error(std::string("geometry file is not valid JSON: ") + e.what());
    }
    ChainArray c;
    try {
        c.dim = j.at("dim").get<int>();
        c.ell = j.at("ell").get<double>();
        c.j_min = j.at("j_min").get<int>();
        for (const auto& p : j.at("points")) {
            if (static_cast<int>(p.size()) != c.dim)
                throw param_error("geometry file: point arity does not match dim");
            Point q = {0.0, 0.0, 0.0};
            for (size_t i = 0; i < p.size(); ++i)
                q[i] = p[i].get<double>();
            c.points.push_back(q);
        }
    } catch (const nlohmann::json::exception& e) {
        throw param_error(std::string("geometry file is missing fields: ") + e.what());
    }
    c.j_max = c.j_min + c.size() - 1;
    c.check();
    return c;
}

ChainArray load_chain(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw param_error("cannot open geometry file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return chain_from_json(ss.str());
}

void save_chain(const ChainArray& chain, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw param_error("cannot write geometry file: " + path);
    out << chain_to_json(chain);
}

} // namespace polybound
