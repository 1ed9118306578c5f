import math

import numpy as np
import pytest

import eitqnd as eq


def test_dawson_and_erfi():
    assert eq.dawson(1.0) == pytest.approx(0.53807950691276842, rel=1e-13)
    assert eq.erfi(1.0) == pytest.approx(1.6504257587975429, rel=1e-13)
    assert eq.j_curve(5.0) == pytest.approx(
        2.0 / math.sqrt(math.pi) * 0.10213407442427684, rel=1e-13
    )


def test_lambda_steady_state_dark():
    p = eq.LambdaParams()
    p.omega1, p.omega2 = 0.5, 0.1
    rho = eq.steady_state(eq.generator3(p))
    assert rho.is_physical()
    s = p.omega1**2 + p.omega2**2
    assert rho.m[0, 0].real == pytest.approx(p.omega2**2 / s, abs=1e-10)
    assert abs(rho.m[1, 1]) < 1e-10


def test_superoperator_matches_numpy_oracle():
    rng = np.random.default_rng(5)
    b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    sup = eq.liouvillian_term(b, 0.4)
    rho = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = rho @ rho.conj().T
    rho /= np.trace(rho)
    direct = 0.4 * (
        b @ rho @ b.conj().T
        - 0.5 * (b.conj().T @ b @ rho + rho @ b.conj().T @ b)
    )
    assert np.linalg.norm(sup.apply(rho) - direct) < 1e-12


def test_qnd_pipeline():
    m = eq.nv_preset()
    assert eq.single_photon_rabi(m) / 1e6 == pytest.approx(194.6, rel=5e-3)
    state = eq.evolve_probe(m, 3.0 + 0j, 1.0)
    assert state.norm_squared() == pytest.approx(1.0, abs=1e-12)
    grid = eq.q_function(state, 6.0, 121, jobs=2)
    assert grid.values.min() >= 0.0
    assert grid.total_mass() == pytest.approx(1.0, abs=5e-3)
    d = eq.distinguishability(m, 3.0 + 0j, [0.0, 1.0, 2.0])
    assert d.overlaps.shape == (3, 3)
    assert np.allclose(np.diag(d.overlaps), 1.0)


def test_ensemble_guard():
    p = eq.NParams()
    p.lambda_.omega1, p.lambda_.omega2 = 0.5, 0.1
    p.omega3, p.delta3 = 0.01, 5.0
    line = eq.InhomLine()
    line.delta0, line.gamma_inh, line.nodes = 1.0, 1.0, 64
    with pytest.raises(ValueError):
        eq.ensemble_coherence_ab_quadrature(p, line)
    line.delta0 = 8.0 * math.sqrt(2.0)
    closed = eq.ensemble_coherence_ab(p, line)
    quad = eq.ensemble_coherence_ab_quadrature(p, line)
    assert abs(closed.value - quad) < 1e-6 * abs(closed.value)
