import math

import numpy as np
import pytest

import tsallisq as tq


def test_classical_values():
    assert tq.tsallis_entropy([0.5, 0.5], 2.0) == pytest.approx(0.5, abs=1e-12)
    assert tq.tsallis_entropy([1.0, 0.0], 200.0) == 0.0
    assert tq.shannon_entropy([0.1, 0.9]) == pytest.approx(0.32508297339144824, abs=1e-12)
    assert tq.conditional_tsallis([[0.4, 0.1], [0.2, 0.3]], 2.0) == pytest.approx(0.4, abs=1e-12)
    assert tq.conditional_via_ratio([[0.4, 0.1], [0.2, 0.3]], 2.0) == pytest.approx(
        0.4, abs=1e-12
    )
    assert tq.marginal_a([[0.5, 0.25], [0.25, 0.0]]) == pytest.approx([0.75, 0.25])
    assert tq.conditional_dist([[0.5, 0.25], [0.25, 0.0]], 0) == pytest.approx(
        [2.0 / 3.0, 1.0 / 3.0]
    )
    s = tq.compose_pseudoadditive(0.5, 0.3, 2.0)
    assert s == pytest.approx(0.5 + 0.3 - 0.5 * 0.3, abs=1e-15)


def test_validation_maps_to_python_exceptions():
    with pytest.raises(ValueError):
        tq.tsallis_entropy([0.5, 0.6], 2.0)
    with pytest.raises(ValueError):
        tq.tsallis_entropy([0.5, 0.5], -1.0)
    with pytest.raises(ValueError):
        tq.conditional_dist([[0.5, 0.5], [0.0, 0.0]], 1)
    with pytest.raises(ValueError):
        tq.werner_popescu(1.5)


def test_quantum_werner():
    w = tq.werner_popescu(0.5)
    assert w.dim_a == 2 and w.dim_b == 2
    assert tq.quantum_tsallis(w.rho, 2.0) == pytest.approx(0.5625, abs=1e-12)
    spec = sorted(w.rho.spectrum(), reverse=True)
    assert spec[0] == pytest.approx(0.625, abs=1e-12)
    r = tq.conditional_quantum(w, 1.0, "A")
    assert r.value == pytest.approx(tq.werner_cond_entropy(0.5, 1.0), abs=1e-10)
    assert r.conditioned_on == "A"
    assert not tq.ppt_test(tq.werner_popescu(0.4)).positive
    assert tq.ppt_test(tq.werner_popescu(0.2)).positive


def test_numpy_interop():
    rho = tq.DensityMatrix.validate(np.eye(4, dtype=complex) / 4.0)
    assert tq.von_neumann(rho) == pytest.approx(math.log(4.0), abs=1e-12)
    st = tq.BipartiteState(2, 2, np.eye(4, dtype=complex) / 4.0)
    reduced = tq.partial_trace(st, "B")
    assert np.allclose(reduced.matrix, np.eye(2) / 2.0)
    pt = tq.partial_transpose(tq.werner_popescu(1.0), "B")
    assert min(np.linalg.eigvalsh(pt)) == pytest.approx(-0.5, abs=1e-12)
    psi = np.zeros(4, dtype=complex)
    psi[1], psi[2] = 1.0, -1.0
    pure = tq.DensityMatrix.pure(psi)
    for q in tq.default_q_grid():
        assert tq.quantum_tsallis(pure, q) == 0.0


def test_threshold_and_criteria():
    t = tq.threshold(1.0)
    assert abs(t.x_star - 0.7476138334463576) < 1e-9
    assert abs(tq.threshold(2.0).x_star - 1.0 / math.sqrt(3.0)) < 1e-9
    ct = tq.criterion_table()
    assert abs(ct.ppt_threshold - 1.0 / 3.0) < 1e-9
    assert abs(ct.q_infinity_limit - ct.ppt_threshold) < 1e-8
    assert ct.bell_bound == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-15)
    scan = tq.threshold_scan([0.5, 2.0, 50.0])
    assert [p.x_star for p in scan] == sorted((p.x_star for p in scan), reverse=True)


def test_ensembles():
    e = tq.SeparableEnsemble([0.5, 0.5], [[1.0, 0.0], [0.0, 1.0]], [[1.0, 0.0], [0.0, 1.0]])
    assert e.terms == 2
    st = tq.assemble_separable(e)
    v_closed = tq.ensemble_conditional(e, 2.0)
    v_spectral = tq.conditional_quantum(st, 2.0, "A").value
    assert v_closed == pytest.approx(v_spectral, abs=1e-10)
    assert v_closed >= -1e-10
    assert tq.ppt_test(st).positive


def test_axioms_and_positivity_small():
    reports = tq.run_axiom_suite(25, 7, [0.5, 2.0])
    assert reports and all(r.passed for r in reports)
    s = tq.separable_positivity_experiment(25, [1.0, 2.0], 99, True)
    assert s.violations == 0
    assert s.min_value >= -1e-10
    assert s.control_value == pytest.approx(-math.log(2.0), abs=1e-9)
    s2 = tq.separable_positivity_experiment(25, [1.0, 2.0], 99, False)
    assert s2.control_value is None
    assert s2.min_value == s.min_value
