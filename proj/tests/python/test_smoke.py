"""Smoke tests for the python bindings."""

import math

import pytest

import polybound as pb


def test_geometry_and_validation():
    chain = pb.gen_bent(30, angle=math.pi / 2)
    assert chain.size() == 61
    assert chain.j_min == -30
    assert chain.at(0) == [0.0, 0.0, 0.0]
    chain.check()

    rep = pb.validate_chain(chain)
    assert not rep.straight
    assert rep.sharp_pairs > 0
    assert abs(rep.c1_est - math.sin(math.pi / 4)) < 1e-12
    assert rep.a2_satisfied

    assert pb.validate_chain(pb.gen_straight(20)).straight


def test_band_edges_reference_value():
    bs = pb.band_edges(3, 0.0)
    assert abs(bs.kappa_thr - 0.962423650119206895) < 1e-12
    assert abs(bs.E_lower + bs.kappa_thr**2) < 1e-14
    assert bs.overlapping


def test_gamma_matrix_shape_and_symmetry():
    chain = pb.gen_bent(10)
    g = pb.build_gamma(chain, 0.0, 1.0)
    assert g.entries.shape == (21, 21)
    assert abs(g.entries - g.entries.T).max() == 0.0
    ev = pb.eig_sym(g.entries)
    assert list(ev) == sorted(ev)


def test_implicit_kappa_conversion():
    # plain floats (and ints) are accepted wherever a spectral parameter goes
    assert abs(pb.g_theta(3, 1.0, 0.0, 1.0) - (-0.0065770548841998301)) < 1e-13
    assert abs(pb.g_theta(3, 1, 0.0, 1.0) - (-0.0065770548841998301)) < 1e-13
    assert pb.green_free(3, 2.0, 1.0) == pytest.approx(math.exp(-2.0) / (4 * math.pi))


def test_bound_state_search():
    chain = pb.gen_bent(40, angle=math.pi / 2)
    states = pb.find_bound_states(chain, 0.0, 40, 2.0)
    assert len(states) == 1
    st = states[0]
    assert st.kappa0 == pytest.approx(0.97776, abs=1e-3)
    assert st.energy == pytest.approx(-st.kappa0**2)
    assert st.below_threshold
    assert len(st.coeffs) == 81
    assert st.kappa0_convergence[-1] == (40, st.kappa0)


def test_two_point_spectrum():
    c = pb.ChainArray()
    c.dim = 3
    c.ell = 1.0
    c.j_min = 0
    c.j_max = 1
    c.points = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]
    spec = pb.finite_array_spectrum(c, 0.0)
    assert len(spec) == 1
    energy, mult = spec[0]
    assert mult == 1
    assert math.sqrt(-energy) == pytest.approx(0.5671432904097839, abs=1e-10)


def test_trial_vector_and_checks():
    p = pb.TrialVectorParams()
    p.lambda_ = 0.2
    p.window = 70
    assert pb.trial_vector_value(pb.gen_bent(80), 0.0, 1.0, p) < 0.0
    assert pb.trial_vector_value(pb.gen_straight(80), 0.0, 1.0, p) >= 0.0

    res = pb.check_g_monotone(3, 1.0, 1.0, 21)
    assert res.passed
    assert res.name == "g_monotone_d3"


def test_exceptions_map_to_python_types():
    assert issubclass(pb.ParamError, ValueError)
    assert issubclass(pb.NumericalError, RuntimeError)
    with pytest.raises(ValueError):
        pb.gen_straight(0)
    with pytest.raises(ValueError):
        pb.band_edges(1, 0.0)
    with pytest.raises(RuntimeError):
        # kappa_max below the root: no bracket
        pb.find_bound_states(pb.gen_bent(50), 0.0, 50, 0.97)
