#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polybound/geometry.hpp"
#include "polybound/greens.hpp"
#include "polybound/krein.hpp"
#include "polybound/lattice.hpp"
#include "polybound/solver.hpp"
#include "polybound/verify.hpp"

namespace py = pybind11;
using namespace polybound;

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectra of point-interaction chains";

    py::register_exception<param_error>(m, "ParamError", PyExc_ValueError);
    py::register_exception<numerical_error>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<Kappa>(m, "Kappa")
        .def(py::init<double>(), py::arg("value"))
        .def_property_readonly("value", &Kappa::value)
        .def("__repr__",
             [](const Kappa& k) { return "Kappa(" + std::to_string(k.value()) + ")"; });
    py::implicitly_convertible<py::float_, Kappa>();
    py::implicitly_convertible<py::int_, Kappa>();

    py::class_<ChainArray>(m, "ChainArray")
        .def(py::init<>())
        .def_readwrite("dim", &ChainArray::dim)
        .def_readwrite("ell", &ChainArray::ell)
        .def_readwrite("j_min", &ChainArray::j_min)
        .def_readwrite("j_max", &ChainArray::j_max)
        .def_readwrite("points", &ChainArray::points)
        .def("size", &ChainArray::size)
        .def("at", &ChainArray::at, py::arg("j"))
        .def("check", &ChainArray::check);

    py::class_<AssumptionReport>(m, "AssumptionReport")
        .def_readonly("c1_est", &AssumptionReport::c1_est)
        .def_readonly("sharp_pairs", &AssumptionReport::sharp_pairs)
        .def_readonly("c2_est", &AssumptionReport::c2_est)
        .def_readonly("mu", &AssumptionReport::mu)
        .def_readonly("omega", &AssumptionReport::omega)
        .def_readonly("a2_satisfied", &AssumptionReport::a2_satisfied)
        .def_readonly("straight", &AssumptionReport::straight);

    py::class_<BandStructure>(m, "BandStructure")
        .def_readonly("dim", &BandStructure::dim)
        .def_readonly("alpha", &BandStructure::alpha)
        .def_readonly("ell", &BandStructure::ell)
        .def_readonly("kappa_thr", &BandStructure::kappa_thr)
        .def_readonly("E_lower", &BandStructure::E_lower)
        .def_readonly("E_upper", &BandStructure::E_upper)
        .def_readonly("overlapping", &BandStructure::overlapping);

    py::class_<GammaMatrix>(m, "GammaMatrix")
        .def_readonly("dim", &GammaMatrix::dim)
        .def_readonly("ell", &GammaMatrix::ell)
        .def_readonly("alpha", &GammaMatrix::alpha)
        .def_readonly("kappa", &GammaMatrix::kappa)
        .def_readonly("j_min", &GammaMatrix::j_min)
        .def_readonly("j_max", &GammaMatrix::j_max)
        .def_readonly("entries", &GammaMatrix::entries);

    py::class_<PerturbationMatrix>(m, "PerturbationMatrix")
        .def_readonly("dim", &PerturbationMatrix::dim)
        .def_readonly("ell", &PerturbationMatrix::ell)
        .def_readonly("kappa", &PerturbationMatrix::kappa)
        .def_readonly("entries", &PerturbationMatrix::entries);

    py::class_<BoundState>(m, "BoundState")
        .def(py::init<>())
        .def_readwrite("kappa0", &BoundState::kappa0)
        .def_readwrite("energy", &BoundState::energy)
        .def_readwrite("branch_index", &BoundState::branch_index)
        .def_readwrite("multiplicity", &BoundState::multiplicity)
        .def_readwrite("coeffs", &BoundState::coeffs)
        .def_readwrite("window", &BoundState::window)
        .def_readwrite("kappa0_convergence", &BoundState::kappa0_convergence)
        .def_readwrite("below_threshold", &BoundState::below_threshold);

    py::class_<ConvergenceRow>(m, "ConvergenceRow")
        .def_readonly("window", &ConvergenceRow::window)
        .def_readonly("found", &ConvergenceRow::found)
        .def_readonly("kappa0", &ConvergenceRow::kappa0)
        .def_readonly("increment", &ConvergenceRow::increment)
        .def_readonly("monotone", &ConvergenceRow::monotone);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("worst_violation", &CheckResult::worst_violation)
        .def_readonly("context", &CheckResult::context);

    py::class_<TrialVectorParams>(m, "TrialVectorParams")
        .def(py::init<>())
        .def_readwrite("lambda_", &TrialVectorParams::lambda)
        .def_readwrite("window", &TrialVectorParams::window);

    // special functions and free Green's data
    m.def("bessel_k0", &bessel_k0, py::arg("x"));
    m.def("bessel_k1", &bessel_k1, py::arg("x"));
    m.def("green_free", &green_free, py::arg("dim"), py::arg("kappa"), py::arg("r"));
    m.def("xi_reg", &xi_reg, py::arg("dim"), py::arg("kappa"));
    m.def("green_rad_deriv", &green_rad_deriv, py::arg("dim"), py::arg("kappa"), py::arg("rho"));

    // geometry
    m.def("gen_straight", &gen_straight, py::arg("n_half"), py::arg("ell") = 1.0,
          py::arg("dim") = 3);
    m.def("gen_bent", &gen_bent, py::arg("n_half"), py::arg("ell") = 1.0, py::arg("dim") = 3,
          py::arg("angle") = 1.5707963267948966);
    m.def("gen_arc_chain", &gen_arc_chain, py::arg("n_half"), py::arg("ell") = 1.0,
          py::arg("dim") = 3, py::arg("arc_edges") = 1, py::arg("turn") = 0.78539816339744831);
    m.def("gen_packed_block", &gen_packed_block, py::arg("M"), py::arg("N"), py::arg("ell") = 1.0,
          py::arg("dim") = 3);
    m.def("validate_chain", &validate_chain, py::arg("chain"), py::arg("omega") = 0.5,
          py::arg("mu_grid") = std::vector<double>{0.6, 0.8, 1.0, 1.5, 2.0});
    m.def("chain_to_json", &chain_to_json, py::arg("chain"));
    m.def("chain_from_json", &chain_from_json, py::arg("text"));
    m.def("load_chain", &load_chain, py::arg("path"));
    m.def("save_chain", &save_chain, py::arg("chain"), py::arg("path"));

    // lattice sums and band structure
    m.def("g_theta", &g_theta, py::arg("dim"), py::arg("kappa"), py::arg("theta"),
          py::arg("ell") = 1.0);
    m.def("g_theta_poisson", &g_theta_poisson, py::arg("dim"), py::arg("kappa"), py::arg("theta"),
          py::arg("ell") = 1.0);
    m.def("band_edges", &band_edges, py::arg("dim"), py::arg("alpha"), py::arg("ell") = 1.0);
    m.def("straight_gamma_interval", &straight_gamma_interval, py::arg("dim"), py::arg("alpha"),
          py::arg("ell"), py::arg("kappa"));

    // Krein matrix algebra
    m.def("build_gamma", &build_gamma, py::arg("chain"), py::arg("alpha"), py::arg("kappa"));
    m.def("build_dmatrix", &build_dmatrix, py::arg("chain"), py::arg("kappa"));
    m.def("hs_norm", &hs_norm, py::arg("d"));
    m.def("eig_sym", &eig_sym, py::arg("matrix"));
    m.def("eig_sym_vectors", &eig_sym_vectors, py::arg("matrix"));
    m.def("lambda_min", &lambda_min, py::arg("chain"), py::arg("alpha"), py::arg("kappa"));

    // solver
    m.def("find_bound_states", &find_bound_states, py::arg("chain"), py::arg("alpha"),
          py::arg("window"), py::arg("kappa_max"));
    m.def("finite_array_spectrum", &finite_array_spectrum, py::arg("chain"), py::arg("alpha"));
    m.def("eigenfunction_eval", &eigenfunction_eval, py::arg("state"), py::arg("chain"),
          py::arg("points"));
    m.def("convergence_study", &convergence_study, py::arg("chain"), py::arg("alpha"),
          py::arg("windows"));

    // property checks
    m.def("scan_monotone_decreasing", &scan_monotone_decreasing, py::arg("f"), py::arg("grid"));
    m.def("check_dkern_negativity", &check_dkern_negativity, py::arg("chain"),
          py::arg("kappa_grid"));
    m.def("trial_vector_value", &trial_vector_value, py::arg("chain"), py::arg("alpha"),
          py::arg("kappa"), py::arg("params"));
    m.def("check_g_monotone", &check_g_monotone, py::arg("dim"), py::arg("kappa"), py::arg("ell"),
          py::arg("theta_points"));
    m.def("check_gbound", &check_gbound, py::arg("kappa_list"));
    m.def("check_hs_decay", &check_hs_decay, py::arg("chain"), py::arg("kappa_list"));
    m.def("check_example_monotonicity", &check_example_monotonicity, py::arg("M_max"),
          py::arg("N_max"), py::arg("alpha"), py::arg("dim") = 3);
    m.def("run_all_checks", &run_all_checks);
}
