#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polybound/geometry.hpp"
#include "polybound/krein.hpp"
#include "polybound/lattice.hpp"
#include "polybound/solver.hpp"
#include "polybound/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polybound;

constexpr double pi = 3.141592653589793238462643;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string units_line(double ell) {
    return "energy in hbar^2/2m = 1; lengths in the same units as ell = " + num(ell);
}

// report to stdout unless -o was given
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw param_error("cannot write output file: " + out_path);
    out << text;
}

struct GeometryArgs {
    std::string kind;
    int n_half = 200;
    double ell = 1.0;
    int dim = 3;
    double angle = pi / 2.0;
    int arc_edges = 1;
    double turn = pi / 4.0;
    int block_m = 1;
    int block_n = 3;
    std::string out_path;
};

int cmd_geometry(const GeometryArgs& a) {
    ChainArray chain;
    if (a.kind == "straight")
        chain = gen_straight(a.n_half, a.ell, a.dim);
    else if (a.kind == "bent")
        chain = gen_bent(a.n_half, a.ell, a.dim, a.angle);
    else if (a.kind == "arc")
        chain = gen_arc_chain(a.n_half, a.ell, a.dim, a.arc_edges, a.turn);
    else if (a.kind == "packed")
        chain = gen_packed_block(a.block_m, a.block_n, a.ell, a.dim);
    else
        throw param_error("unknown geometry kind: " + a.kind +
                          " (expected straight|bent|arc|packed)");
    emit(chain_to_json(chain), a.out_path);
    return 0;
}

struct ValidateArgs {
    std::string geometry_path;
    double omega = 0.5;
    std::string out_path;
};

int cmd_validate(const ValidateArgs& a) {
    const ChainArray chain = load_chain(a.geometry_path);
    const AssumptionReport rep = validate_chain(chain, a.omega);
    ordered_json j;
    j["units"] = units_line(chain.ell);
    j["c1_est"] = rep.c1_est;
    j["sharp_pairs"] = rep.sharp_pairs;
    j["a2_params"] = {{"c2_est", rep.c2_est}, {"mu", rep.mu}, {"omega", rep.omega}};
    j["a2_satisfied"] = rep.a2_satisfied;
    j["straight"] = rep.straight;
    emit(j.dump(2) + "\n", a.out_path);
    return 0;
}

struct BandsArgs {
    int dim = 3;
    double alpha = 0.0;
    double ell = 1.0;
    std::string out_path;
};

int cmd_bands(const BandsArgs& a) {
    const BandStructure bs = band_edges(a.dim, a.alpha, a.ell);
    ordered_json j;
    j["units"] = units_line(a.ell);
    j["dim"] = bs.dim;
    j["alpha"] = bs.alpha;
    j["ell"] = bs.ell;
    j["kappa_thr"] = bs.kappa_thr;
    j["E_lower"] = bs.E_lower;
    j["E_upper"] = bs.E_upper;
    j["overlapping"] = bs.overlapping;
    emit(j.dump(2) + "\n", a.out_path);
    return 0;
}

struct SolveArgs {
    std::string geometry_path;
    double alpha = 0.0;
    int window = 200;
    double kappa_max = 0.0; // 0 = derive from the threshold
    std::string format = "csv";
    std::string out_path;
};

int cmd_solve(const SolveArgs& a) {
    const ChainArray chain = load_chain(a.geometry_path);
    double kappa_max = a.kappa_max;
    if (kappa_max == 0.0) {
        const BandStructure bs = band_edges(chain.dim, a.alpha, chain.ell);
        kappa_max = std::min(Kappa::max_value, std::max(1.0, 3.0 * bs.kappa_thr));
    }
    const auto states = find_bound_states(chain, a.alpha, a.window, kappa_max);

    if (a.format == "csv") {
        std::string text = "# units: " + units_line(chain.ell) + "\n";
        text += "branch_index,kappa0,energy,window,below_threshold\n";
        for (const auto& st : states)
            text += std::to_string(st.branch_index) + "," + num(st.kappa0) + "," +
                    num(st.energy) + "," + std::to_string(st.window) + "," +
                    (st.below_threshold ? "true" : "false") + "\n";
        emit(text, a.out_path);
    } else if (a.format == "json") {
        ordered_json j;
        j["units"] = units_line(chain.ell);
        j["alpha"] = a.alpha;
        j["window"] = a.window;
        j["kappa_max"] = kappa_max;
        auto list = ordered_json::array();
        for (const auto& st : states) {
            ordered_json s;
            s["branch_index"] = st.branch_index;
            s["kappa0"] = st.kappa0;
            s["energy"] = st.energy;
            s["multiplicity"] = st.multiplicity;
            s["window"] = st.window;
            s["below_threshold"] = st.below_threshold;
            s["coeffs"] = std::vector<double>(st.coeffs.data(), st.coeffs.data() + st.coeffs.size());
            auto conv = ordered_json::array();
            for (const auto& [w, k] : st.kappa0_convergence)
                conv.push_back({w, k});
            s["kappa0_convergence"] = std::move(conv);
            list.push_back(std::move(s));
        }
        j["states"] = std::move(list);
        emit(j.dump(2) + "\n", a.out_path);
    } else {
        throw param_error("unknown format: " + a.format + " (expected csv|json)");
    }
    return 0;
}

struct SweepArgs {
    std::string geometry_path;
    double alpha = 0.0;
    double kappa_min = 0.5;
    double kappa_max = 2.0;
    int samples = 33;
    int branches = 1;
    std::string out_path;
};

int cmd_sweep(const SweepArgs& a) {
    const ChainArray chain = load_chain(a.geometry_path);
    if (a.samples < 1)
        throw param_error("samples must be >= 1");
    if (a.samples > 1 && !(a.kappa_max > a.kappa_min))
        throw param_error("kappa-max must exceed kappa-min when samples > 1");
    if (a.branches < 1)
        throw param_error("branches must be >= 1");
    if (a.branches > chain.size())
        throw param_error("branches exceeds the matrix size " + std::to_string(chain.size()));

    std::string text = "# units: " + units_line(chain.ell) + "\n";
    text += "kappa";
    for (int b = 1; b <= a.branches; ++b)
        text += ",lambda_" + std::to_string(b);
    text += "\n";
    for (int s = 0; s < a.samples; ++s) {
        const double kappa =
            a.samples == 1
                ? a.kappa_min
                : a.kappa_min + (a.kappa_max - a.kappa_min) * s / (a.samples - 1);
        const Eigen::VectorXd ev = eig_sym(build_gamma(chain, a.alpha, Kappa(kappa)).entries);
        text += num(kappa);
        for (int b = 0; b < a.branches; ++b)
            text += "," + num(ev(b));
        text += "\n";
    }
    emit(text, a.out_path);
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::string out_path;
};

int cmd_verify(const VerifyArgs& a) {
    std::vector<CheckResult> all = run_all_checks();
    std::vector<CheckResult> selected;
    if (a.suite == "all") {
        selected = std::move(all);
    } else {
        for (auto& r : all)
            if (r.name == a.suite)
                selected.push_back(std::move(r));
        if (selected.empty()) {
            std::string known;
            for (const auto& r : all)
                known += (known.empty() ? "" : ", ") + r.name;
            throw param_error("unknown check name: " + a.suite + " (known: " + known + ")");
        }
    }
    bool all_passed = true;
    ordered_json j;
    j["units"] = units_line(1.0);
    auto list = ordered_json::array();
    for (const auto& r : selected) {
        all_passed = all_passed && r.passed;
        ordered_json c;
        c["name"] = r.name;
        c["passed"] = r.passed;
        c["worst_violation"] = r.worst_violation;
        c["context"] = r.context;
        list.push_back(std::move(c));
    }
    j["checks"] = std::move(list);
    j["all_passed"] = all_passed;
    emit(j.dump(2) + "\n", a.out_path);
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polybound: spectra of point-interaction chains"};
    app.require_subcommand(1);

    GeometryArgs ga;
    auto* geo = app.add_subcommand("geometry", "generate a chain geometry file");
    geo->add_option("kind", ga.kind, "straight|bent|arc|packed")->required();
    geo->add_option("--n-half", ga.n_half, "half-window: labels run over [-n_half, n_half]");
    geo->add_option("--ell", ga.ell, "neighbor spacing");
    geo->add_option("--dim", ga.dim, "ambient dimension (2 or 3)");
    geo->add_option("--angle", ga.angle, "bent: angle between the arms, in (0, pi]");
    geo->add_option("--arc-edges", ga.arc_edges, "arc: number of kinked edges");
    geo->add_option("--turn", ga.turn, "arc: total turning angle, |turn| < pi");
    geo->add_option("--M", ga.block_m, "packed: block half-size");
    geo->add_option("--N", ga.block_n, "packed: tail half-extent (N >= M)");
    geo->add_option("-o,--output", ga.out_path, "output path (default: stdout)");

    ValidateArgs va;
    auto* val = app.add_subcommand("validate", "check the chain assumptions, report estimates");
    val->add_option("geometry", va.geometry_path, "geometry JSON file")->required();
    val->add_option("--omega", va.omega, "sector parameter in (0,1)");
    val->add_option("-o,--output", va.out_path, "output path (default: stdout)");

    BandsArgs ba;
    auto* ban = app.add_subcommand("bands", "straight-chain band structure");
    ban->add_option("--dim", ba.dim, "ambient dimension (2 or 3)");
    ban->add_option("--alpha", ba.alpha, "coupling parameter");
    ban->add_option("--ell", ba.ell, "neighbor spacing");
    ban->add_option("-o,--output", ba.out_path, "output path (default: stdout)");

    SolveArgs sa;
    auto* sol = app.add_subcommand("solve", "bound states below the band edge");
    sol->add_option("geometry", sa.geometry_path, "geometry JSON file")->required();
    sol->add_option("--alpha", sa.alpha, "coupling parameter");
    sol->add_option("--window", sa.window, "truncation half-window N");
    sol->add_option("--kappa-max", sa.kappa_max, "bracket cap (default: derived from threshold)");
    sol->add_option("--format", sa.format, "csv|json");
    sol->add_option("-o,--output", sa.out_path, "output path (default: stdout)");

    SweepArgs wa;
    auto* swp = app.add_subcommand("sweep", "eigenvalue branches over a kappa range (plot data)");
    swp->add_option("geometry", wa.geometry_path, "geometry JSON file")->required();
    swp->add_option("--alpha", wa.alpha, "coupling parameter");
    swp->add_option("--kappa-min", wa.kappa_min, "first kappa sample");
    swp->add_option("--kappa-max", wa.kappa_max, "last kappa sample");
    swp->add_option("--samples", wa.samples, "number of samples");
    swp->add_option("--branches", wa.branches, "how many lowest branches to emit");
    swp->add_option("-o,--output", wa.out_path, "output path (default: stdout)");

    VerifyArgs ka;
    auto* ver = app.add_subcommand("verify", "run the property-check suite");
    ver->add_option("--suite", ka.suite, "all, or one check name");
    ver->add_option("-o,--output", ka.out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return 2;
    }

    try {
        if (geo->parsed())
            return cmd_geometry(ga);
        if (val->parsed())
            return cmd_validate(va);
        if (ban->parsed())
            return cmd_bands(ba);
        if (sol->parsed())
            return cmd_solve(sa);
        if (swp->parsed())
            return cmd_sweep(wa);
        if (ver->parsed())
            return cmd_verify(ka);
    } catch (const param_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
