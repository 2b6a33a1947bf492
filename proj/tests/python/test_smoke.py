"""Smoke tests for the Python bindings: construction, the headline numbers,
and error propagation. The heavy numerical validation lives in the C++ suite.
"""

import math

import pytest

import casimirmd as cm


def drude_gold():
    m = cm.MaterialModel()
    m.electric = cm.Response.oscillator(cm.OscillatorParams(1.0, 0.0, 3.9e-9))
    return m


def magnetodielectric():
    m = cm.MaterialModel()
    m.electric = cm.Response.oscillator(
        cm.OscillatorParams.from_relative(0.5, 0.1, 1e-2))
    m.magnetic = cm.Response.oscillator(
        cm.OscillatorParams.from_relative(3.0, 1e-4, 1e-2))
    return m


def realistic(d):
    return cm.CavityConfig(cm.LayerStack.half_space(drude_gold()),
                           cm.LayerStack.half_space(magnetodielectric()), d)


def test_units():
    au = cm.ReferenceScale(9.0)
    assert cm.length_unit_nm(au) == pytest.approx(21.9, rel=0.01)
    assert cm.force_unit_si(au) == pytest.approx(5670.0, rel=0.02)
    assert cm.distance_si_um(au, 850.0) == pytest.approx(18.7, rel=0.01)
    assert cm.reduced_temperature(au, 300.0) == pytest.approx(2.8724e-3, rel=1e-3)


def test_materials():
    p = cm.OscillatorParams.from_relative(3.0, 1e-4, 1e-2)
    assert p.omega_p == pytest.approx(3e-4)
    assert cm.response_at_imag_freq(cm.OscillatorParams(1.0, 0.5, 0.0),
                                    0.5) == pytest.approx(3.0)
    assert math.isinf(cm.Response.constant(cm.INFINITE_RESPONSE).at(1.0))


def test_perfect_mirrors():
    mirror = cm.MaterialModel()
    mirror.electric = cm.Response.constant(cm.INFINITE_RESPONSE)
    cavity = cm.CavityConfig(cm.LayerStack.half_space(mirror),
                             cm.LayerStack.half_space(mirror), 1.0)
    assert cm.force_T0_polar(cavity).f_over_fid == pytest.approx(1.0, abs=1e-6)


def test_repulsion_at_850():
    result = cm.force_T0_polar(realistic(850.0))
    assert result.f_over_f0 == pytest.approx(-2.88e-14, rel=0.05)
    cartesian = cm.force_T0_cartesian(realistic(850.0))
    assert cartesian.f_over_fid == pytest.approx(result.f_over_fid, rel=1e-6)


def test_finite_temperature():
    t = cm.reduced_temperature(cm.ReferenceScale(9.0), 300.0)
    result = cm.force_finite_T(realistic(850.0), t)
    assert result.f_over_f0 == pytest.approx(5.09e-13, rel=0.05)
    assert result.matsubara_terms >= 3


def test_analysis_roundtrip():
    quad = cm.QuadratureSettings()
    quad.rel_tol = 1e-6
    crossing = cm.crossover_distance(realistic(1.0), 100.0, 2000.0, quad=quad)
    assert crossing == pytest.approx(640.0, rel=0.02)
    scan = cm.distance_scan(realistic(1.0), [100.0, 850.0], quad=quad)
    assert scan.points[0].ok and scan.points[1].ok
    assert scan.points[0].f_over_f0 > 0 > scan.points[1].f_over_f0

    grid = cm.sweep_2d(realistic(1.0), "right.electric.P", "right.magnetic.P",
                       [0.5, 8.0], [1.0, 8.0], quad=quad)
    assert len(grid.points) == 4
    assert all(p.ok for p in grid.points)


def test_apply_parameter():
    cavity = realistic(850.0)
    cm.apply_parameter(cavity, "d", 100.0)
    assert cavity.gap == 100.0
    cm.apply_parameter(cavity, "right.magnetic.Q", 0.2)
    assert cavity.right.terminator.magnetic.params.omega_p == pytest.approx(0.6)


def test_parse_config():
    cfg = cm.parse_config("""{
        "scale": {"plasma_energy_ev": 9.0},
        "left": "drude_gold_T0",
        "right": "vacuum",
        "gap": 850
    }""")
    assert cfg.scale.plasma_energy_ev == 9.0
    assert cfg.cavity.gap == 850.0
    with pytest.raises(cm.ConfigError):
        cm.parse_config("{}")


def test_errors_propagate():
    with pytest.raises(ValueError):
        cm.CavityConfig(cm.LayerStack.half_space(cm.MaterialModel.vacuum()),
                        cm.LayerStack.half_space(cm.MaterialModel.vacuum()),
                        -1.0)
