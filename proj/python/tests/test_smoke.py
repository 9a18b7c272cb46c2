import math
from fractions import Fraction

import pytest

import ptq


def test_table_entries():
    assert ptq.rhp_polynomial(-1, 3) == []
    assert ptq.rhp_polynomial(Fraction(-3, 2), 2) == [Fraction(-2), 0, Fraction(8, 3)]
    assert ptq.rhp_polynomial("-9/5", 2) == [Fraction(-2), 0, Fraction(26, 9)]


def test_rodrigues_and_ode():
    for N in ("1", "-3/2", "9/5", "-4"):
        for n in range(7):
            assert ptq.rhp_polynomial(N, n) == ptq.rodrigues_polynomial(N, n)
            assert ptq.ode_residual_is_zero(N, n)


def test_gegenbauer():
    assert ptq.gegenbauer_poly(Fraction(1, 2), 2) == [Fraction(-1, 2), 0, Fraction(3, 2)]
    with pytest.raises(ValueError):
        ptq.gegenbauer_poly(0, 2)


def test_spectrum():
    states = ptq.spectrum(mass=1, depth=3, alpha=1)
    assert [s["energy"] for s in states] == [-2.0, -0.5, 0.0, -0.5, -2.0]
    assert [s["normalizable"] for s in states] == [True, True, False, False, False]
    assert ptq.bargmann_index(1, 3, 1) == 2.0


def test_eigenfunctions():
    assert ptq.eigenfunction(1.0, 0, 0.0) == 1.0
    assert math.isclose(ptq.eigenfunction(1.0, 0, 0.0, normalized=True), math.sqrt(2) / 2)
    assert abs(ptq.mpt_overlap(2.5, 0, 2)) < 1e-10
    with pytest.raises(ptq.NonNormalizableError):
        ptq.eigenfunction(1.5, 2, 0.0, normalized=True)
    assert ptq.ladder_coefficient(2.0, "lower", 0) == 0.0


def test_classical_and_group():
    assert ptq.hamiltonian(0.0, 0.0) == -1.0
    assert ptq.so21_residual(0.3, 1.5) < 1e-6
    with pytest.raises(ptq.BranchError):
        ptq.so21_residual(0.0, math.sqrt(2))
    g = ptq.compose([0.1, 0.2, 0.3, 0.0], [0.0, 0.0, 0.0, 0.0])
    assert g == pytest.approx([0.1, 0.2, 0.3, 0.0], abs=1e-15)
    with pytest.raises(ptq.BranchError):
        ptq.compose([1.6, 0, 0, 0], [0, 0, 0, 0])


def test_verify_suite():
    results = ptq.run_verify("rhp", 42)
    assert results and all(r["passed"] for r in results)
    assert ptq.suite_names()[0] == "rhp"
