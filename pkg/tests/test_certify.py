import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from ewcones.certify import (
    block_positivity_min,
    certify_decomposability,
    detect,
    pairing,
    probe_state,
)
from ewcones.cones import bd_curve, special_points
from ewcones.family import WitnessParams, witness_from_params
from ewcones.linalg import partial_transpose
from ewcones.maps import Witness, max_entangled_projector


def ppt_ok(rho):
    return (
        np.linalg.eigvalsh(rho)[0] >= -1e-12
        and np.linalg.eigvalsh(partial_transpose(rho, 4, 4))[0] >= -1e-12
    )


def test_probe_state_is_ppt():
    for eps in (0.125, 0.5, 1.0, 2.0, 8.0):
        probe = probe_state(eps)
        assert ppt_ok(probe.state)
    assert np.trace(probe_state(1.0).state).real == pytest.approx(16.0)


def test_probe_state_rejects_bad_epsilon():
    with pytest.raises(ValueError):
        probe_state(0.0)
    with pytest.raises(ValueError):
        probe_state(-2.0)


def test_pairing_closed_form():
    # Tr(W rho_eps) = 4 (d/eps + b eps - b - d) for any member
    rng = np.random.default_rng(30)
    count = 0
    while count < 15:
        b, d = rng.uniform(0.0, 1.2, size=2)
        c = rng.uniform(0.0, 1.0)
        a = 3.0 - b - c - d
        if not 0.0 <= a <= 3.0:
            continue
        count += 1
        w = witness_from_params(WitnessParams(a, b, c, d))
        for eps in (0.3, 1.0, 2.7):
            expected = 4.0 * (d / eps + b * eps - b - d)
            assert pairing(w, probe_state(eps)) == pytest.approx(expected, abs=1e-10)


def test_certify_special_point_one():
    cert = certify_decomposability(WitnessParams(1.0, 1.0, 1.0, 0.0))
    assert cert.verdict == "indecomposable"
    assert cert.on_cone and cert.warning is None
    assert cert.epsilon == pytest.approx(0.5)
    assert cert.pairing_value == pytest.approx(-2.0, abs=1e-12)
    assert_allclose(cert.epsilon_interval, (0.0, 1.0), atol=1e-14)


def test_certify_zero_b_scans():
    cert = certify_decomposability(WitnessParams(1.0, 0.0, 1.0, 1.0))
    assert cert.verdict == "indecomposable"
    assert cert.epsilon == pytest.approx(2.0**20)
    assert cert.pairing_value == pytest.approx(4.0 * (2.0**-20 - 1.0), abs=1e-12)
    lo, hi = cert.epsilon_interval
    assert lo == pytest.approx(1.0)
    assert math.isinf(hi)


def test_certify_optimal_epsilon_and_interval():
    cert = certify_decomposability(WitnessParams(1.0, 1.0, 0.5, 0.5))
    assert cert.epsilon == pytest.approx(math.sqrt(0.5))
    assert cert.pairing_value == pytest.approx(-4.0 * (1.0 - math.sqrt(0.5)) ** 2, abs=1e-12)
    lo, hi = cert.epsilon_interval
    assert (lo, hi) == (pytest.approx(0.5), pytest.approx(1.0))
    # interval endpoints are roots of the pairing
    w = witness_from_params(cert.params)
    assert pairing(w, probe_state(lo)) == pytest.approx(0.0, abs=1e-9)
    assert pairing(w, probe_state(hi)) == pytest.approx(0.0, abs=1e-9)


def test_certify_decomposable_split():
    cert = certify_decomposability(WitnessParams(1.5, 0.5, 0.5, 0.5))
    assert cert.verdict == "decomposable"
    assert cert.p_psd and cert.q_psd
    assert cert.reconstruction_error < 1e-12
    assert_allclose(np.sort(cert.a_eigenvalues), [0.0, 2.0, 2.0, 2.0], atol=1e-10)
    w = witness_from_params(cert.params)
    rebuilt = cert.p_op + partial_transpose(cert.q_op, 4, 4)
    assert_allclose(rebuilt, w.operator, atol=1e-12)
    assert np.linalg.eigvalsh(cert.p_op)[0] >= -1e-10
    assert np.linalg.eigvalsh(cert.q_op)[0] >= -1e-10


def test_certify_reduction_gram_vanishes():
    cert = certify_decomposability(WitnessParams(0.0, 1.0, 1.0, 1.0))
    assert cert.verdict == "decomposable"
    assert_allclose(cert.a_eigenvalues, np.zeros(4), atol=1e-12)
    assert cert.reconstruction_error < 1e-12


def test_certify_bd_curve_members():
    for cone in ("I", "II"):
        for p in bd_curve(cone, samples=9):
            cert = certify_decomposability(p)
            assert cert.verdict == "decomposable"
            assert cert.p_psd and cert.q_psd
            assert cert.reconstruction_error < 1e-10
            b, c = p.b, p.c
            expected = sorted([0.0, 4.0 * (1.0 - b), 2.0 * (2.0 - b - c), 2.0 * (2.0 - b - c)])
            assert_allclose(cert.a_eigenvalues, expected, atol=1e-10)


def test_certify_off_cone_warns():
    cert = certify_decomposability(WitnessParams(0.75, 0.75, 0.75, 0.75))
    assert cert.verdict == "decomposable"
    assert not cert.on_cone
    assert cert.warning is not None
    cert = certify_decomposability(WitnessParams(1.2, 1.0, 0.3, 0.5))
    assert cert.verdict == "indecomposable"
    assert cert.warning is not None
    assert cert.pairing_value < -1e-3


def test_certify_validates_params():
    with pytest.raises(ValueError):
        certify_decomposability(WitnessParams(1.0, 1.0, 1.0, 1.0))


def test_special_points_verdicts():
    expected = {"i": "indecomposable", "ii": "indecomposable",
                "iii": "decomposable", "iv": "decomposable"}
    for sp in special_points():
        cert = certify_decomposability(sp.params)
        assert cert.verdict == expected[sp.label]


def test_block_positivity_on_members():
    for sp in special_points():
        w = witness_from_params(sp.params)
        assert block_positivity_min(w, restarts=8, seed=1) >= -1e-9


def test_block_positivity_reduction_hits_zero():
    w = witness_from_params(WitnessParams(0.0, 1.0, 1.0, 1.0))
    assert abs(block_positivity_min(w, restarts=8, seed=0)) < 1e-8


def test_block_positivity_finds_negative_directions():
    # -P+ has product minimum exactly -1/4
    w = Witness(n=4, operator=-max_entangled_projector(4))
    assert block_positivity_min(w, restarts=4, seed=0) == pytest.approx(-0.25, abs=1e-10)


def test_block_positivity_restart_prefix():
    # restart r reuses rng stream [seed, r]: more restarts never raise the min
    w = witness_from_params(WitnessParams(1.0, 1.0, 1.0, 0.0))
    four = block_positivity_min(w, restarts=4, seed=3)
    eight = block_positivity_min(w, restarts=8, seed=3)
    assert eight <= four + 1e-15


def test_detect_values():
    w = witness_from_params(WitnessParams(1.0, 1.0, 1.0, 0.0))
    assert detect(w, np.eye(16) / 16.0) == pytest.approx(0.75)
    assert detect(w, max_entangled_projector(4)) == pytest.approx(-2.0)


def test_detect_flags_ppt_entanglement():
    w = witness_from_params(WitnessParams(1.0, 1.0, 1.0, 0.0))
    probe = probe_state(0.5)
    rho = probe.state / np.trace(probe.state).real
    assert ppt_ok(rho)
    assert detect(w, rho) < -1e-3


def test_detect_validation():
    w = witness_from_params(WitnessParams(1.5, 0.5, 0.5, 0.5))
    with pytest.raises(ValueError, match="shape"):
        detect(w, np.eye(4))
    with pytest.raises(ValueError, match="Hermitian"):
        bad = np.zeros((16, 16))
        bad[0, 1] = 1.0
        detect(w, bad)
    with pytest.raises(ValueError, match="eigenvalue"):
        detect(w, np.diag([1.0] * 15 + [-1.0]))
