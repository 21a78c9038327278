"""Structural physical approximation of circulant family witnesses.

Mixing a witness with white noise until it turns positive yields a state;
for this family the critical mixture is exactly separable, which is shown
constructively by a split into 2 x 2 supported blocks plus a diagonal rest.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .family import WitnessParams, witness_from_params
from .linalg import hermitian_eig, partial_transpose
from .maps import Witness

__all__ = [
    "SpaResult",
    "critical_p",
    "critical_p_from_a",
    "spa3_check",
    "spa_decompose",
    "spa_mix",
]

EVIDENCE_TOL = 1e-10


def spa_mix(w: Witness, p: float) -> np.ndarray:
    """Convex mixture (1 - p) W / Tr W + p I / dim."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing parameter must lie in [0, 1], got {p}")
    dim = w.operator.shape[0]
    return (1.0 - p) * w.operator / w.trace() + (p / dim) * np.eye(dim)


def critical_p(w: Witness) -> float:
    """Smallest p for which spa_mix(w, p) is positive semidefinite."""
    dim = w.operator.shape[0]
    low = hermitian_eig(w.operator).values[0] / w.trace()
    if low >= 0:
        return 0.0
    return float(-low / (1.0 / dim - low))


def critical_p_from_a(a: float) -> float:
    """Closed form of the critical mixing parameter on the circulant family."""
    return 4.0 * (3.0 - a) / (15.0 - 4.0 * a)


def spa3_check(params: WitnessParams) -> tuple[float, float, float]:
    """Slack triple whose nonnegativity makes the critical mixture separable.

    Entry s is the weight the diagonal remainder assigns to every ket
    |i, i+s> after the pair terms are removed.
    """
    a, b, c, d = params.a, params.b, params.c, params.d
    return (
        2.0 * b + c + d - 1.0,
        2.0 * c + b + d - 1.0,
        2.0 * d + b + c - 1.0,
    )


def _pair_term(i: int, j: int) -> np.ndarray:
    sigma = np.zeros((16, 16), dtype=complex)
    for x, y in ((i, j), (j, i), (i, i), (j, j)):
        sigma[4 * x + y, 4 * x + y] += 1.0
    sigma[4 * i + i, 4 * j + j] -= 1.0
    sigma[4 * j + j, 4 * i + i] -= 1.0
    return sigma


def _pair_support_ok(sigma: np.ndarray, i: int, j: int) -> bool:
    keep = [4 * x + y for x in (i, j) for y in (i, j)]
    mask = np.zeros((16, 16), dtype=bool)
    mask[np.ix_(keep, keep)] = True
    if np.max(np.abs(sigma[~mask])) > 1e-12:
        return False
    sub = sigma[np.ix_(keep, keep)]
    if hermitian_eig(sub).values[0] < -EVIDENCE_TOL:
        return False
    return hermitian_eig(partial_transpose(sub, 2, 2)).values[0] >= -EVIDENCE_TOL


@dataclass(frozen=True, eq=False)
class SpaResult:
    """Critical mixture of a circulant witness with its separable split."""

    params: WitnessParams
    p_star: float
    mixed_operator: np.ndarray
    sigma_pairs: tuple[tuple[tuple[int, int], np.ndarray], ...]
    sigma_diag: np.ndarray
    normalization: float
    slacks: tuple[float, float, float]
    spa3_satisfied: bool
    pairs_separable: bool
    reconstruction_error: float


def spa_decompose(params: WitnessParams) -> SpaResult:
    """Split the critical mixture into manifestly separable pieces.

    The identity W + (3 - a) I equals a sum of six pair terms, each PPT on
    a 2 x 2 support, plus a diagonal remainder whose weights are the slack
    triple. Rescaled by the normalization this reproduces spa_mix at the
    critical parameter.
    """
    params.validate()
    a = params.a
    w = witness_from_params(params)
    p_star = critical_p_from_a(a)
    mixed = spa_mix(w, p_star)
    slacks = spa3_check(params)

    pairs = []
    total = np.zeros((16, 16), dtype=complex)
    pairs_ok = True
    for i in range(4):
        for j in range(i + 1, 4):
            sigma = _pair_term(i, j)
            pairs.append(((i, j), sigma))
            total += sigma
            pairs_ok = pairs_ok and _pair_support_ok(sigma, i, j)
    diag = np.zeros((16, 16), dtype=complex)
    for i in range(4):
        for s in range(1, 4):
            diag[4 * i + (i + s) % 4, 4 * i + (i + s) % 4] += slacks[s - 1]
    total += diag

    norm = 1.0 / (4.0 * (15.0 - 4.0 * a))
    error = float(np.max(np.abs(mixed - norm * total)))
    return SpaResult(
        params=params,
        p_star=float(p_star),
        mixed_operator=mixed,
        sigma_pairs=tuple(pairs),
        sigma_diag=diag,
        normalization=norm,
        slacks=slacks,
        spa3_satisfied=bool(min(slacks) >= -EVIDENCE_TOL),
        pairs_separable=bool(pairs_ok),
        reconstruction_error=error,
    )
