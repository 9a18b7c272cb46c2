"""Poschl-Teller well and relativistic oscillator numerics."""

from fractions import Fraction

from . import _core
from ._core import (
    BranchError,
    NonNormalizableError,
    QuadratureError,
    bargmann_index,
    compose,
    eigenfunction,
    hamiltonian,
    hermite_limit_error,
    ladder_coefficient,
    mpt_overlap,
    ode_residual_is_zero,
    run_verify,
    so21_residual,
    spectrum,
    suite_names,
)

__all__ = [
    "BranchError",
    "NonNormalizableError",
    "QuadratureError",
    "bargmann_index",
    "compose",
    "eigenfunction",
    "gegenbauer_poly",
    "hamiltonian",
    "hermite_limit_error",
    "ladder_coefficient",
    "mpt_overlap",
    "ode_residual_is_zero",
    "rhp_polynomial",
    "rodrigues_polynomial",
    "run_verify",
    "so21_residual",
    "spectrum",
    "suite_names",
]


def _index(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def rhp_polynomial(N, n):
    """Coefficients of H_n^N, lowest power first, as Fractions."""
    return [Fraction(c) for c in _core.rhp_coefficients(_index(N), n)]


def rodrigues_polynomial(N, n):
    return [Fraction(c) for c in _core.rodrigues_coefficients(_index(N), n)]


def gegenbauer_poly(lam, n):
    return [Fraction(c) for c in _core.gegenbauer_coefficients(_index(lam), n)]
