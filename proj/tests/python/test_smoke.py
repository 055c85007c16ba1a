import json
import math

import numpy as np
import pytest

import tfloc


@pytest.fixture
def spec():
    return tfloc.LatticeSpec(1, 8)


@pytest.fixture
def torus():
    return tfloc.TorusGrid(1, 49)


def test_lattice_defaults(spec):
    assert spec.C == 24
    assert spec.size == 49


def test_m2_norm_of_three_four(spec, torus):
    values = np.zeros(spec.size, dtype=complex)
    values[24], values[25] = 3.0, 4.0
    f = tfloc.Signal(spec, values)
    g = tfloc.make_window(spec)
    assert abs(tfloc.modulation_norm(f, g, torus, 2.0) - 5.0) < 1e-10


def test_stft_round_trip(spec, torus):
    rng = np.random.default_rng(0)
    values = np.zeros(spec.size, dtype=complex)
    values[16:33] = rng.normal(size=17) + 1j * rng.normal(size=17)
    f = tfloc.Signal(spec, values)
    g = tfloc.make_window(spec)
    V = tfloc.stft(f, g, torus)
    assert V.values.shape == (33, 49)
    assert abs(V.l2_norm() - f.norm()) < 1e-10 * f.norm()
    back = tfloc.invert(V, g, g)
    assert np.max(np.abs(back.values - values)) < 1e-10 * f.norm()


def test_young_functions():
    e = tfloc.YoungFunction.eq5()
    assert math.isclose(e(math.exp(-2.0)), 2.0 * math.exp(-4.0), rel_tol=1e-14)
    assert math.isclose(tfloc.complementary(tfloc.YoungFunction.power(2.0), 2.0), 1.0, rel_tol=1e-9)
    assert tfloc.YoungFunction.parse("conjugate(eq5)").name == "conjugate(eq5)"
    assert math.isclose(tfloc.luxemburg(np.array([3.0, 4.0]), tfloc.YoungFunction.power(2.0)), 5.0,
                        rel_tol=1e-9)
    with pytest.raises(tfloc.DomainError):
        e(-1.0)


def test_identity_operator(spec, torus):
    g = tfloc.make_window(spec)
    K = tfloc.kernel(tfloc.constant_symbol(spec, torus, 1.0), g, g)
    assert K.shape == (49, 49)
    block = K[16:33, 16:33]
    assert np.max(np.abs(block - np.eye(17))) < 1e-10
    summary = tfloc.spectrum(np.eye(4, dtype=complex))
    assert math.isclose(summary["schatten"][1.0], 4.0)
    assert math.isclose(summary["schatten"][math.inf], 1.0)


def test_errors_are_typed(spec, torus):
    with pytest.raises(tfloc.UsageError, match='"foo"'):
        tfloc.run_checks({"checks": [{"id": "foo"}]})
    d0, d1 = tfloc.delta(spec, 0), tfloc.delta(spec, 1)
    with pytest.raises(tfloc.ConditioningError):
        tfloc.invert(tfloc.stft(d0, d0, torus), d0, d1)
    assert issubclass(tfloc.PrecisionError, tfloc.Error)


def test_run_checks_is_deterministic():
    cfg = {"checks": [{"id": "plancherel", "trials": 5}, {"id": "holder_sequence", "trials": 10}]}
    first = tfloc.run_checks(cfg)
    assert [r["id"] for r in first] == ["plancherel", "holder_sequence"]
    assert all(r["violations"] == 0 for r in first)
    assert first == tfloc.run_checks(json.dumps(cfg))


def test_registry_lists_modules():
    modules = {c["module"] for c in tfloc.registry()}
    assert modules == {"lattice", "stft", "young", "orlicz", "modulation", "locop"}
