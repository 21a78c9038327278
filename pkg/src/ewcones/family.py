"""The circulant witness family on C^4 x C^4 and its closed parameter forms.

After twirling, every rotation witness is described by four nonnegative
parameters (a, b, c, d) summing to 3: the diagonal block of row i carries
them cyclically starting at position i, and every off-diagonal block is
minus a matrix unit. This module provides the closed forms mapping Euler
angles to parameters for both parities, the entrywise pre-twirl tables with
their audited correction, witness assembly from parameters, and the n=3
circulant analogue.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import kron
from .maps import Witness, _unit

__all__ = [
    "N3Params",
    "WitnessParams",
    "abcd_from_euler",
    "appendix_entries",
    "appendix_matrix",
    "n3_abc",
    "params_from_witness",
    "witness_from_params",
]

PARAM_SUM_TOL = 1e-10
PARAM_NEG_TOL = 1e-10

_S2 = np.sqrt(2.0)
_S3 = np.sqrt(3.0)
_S6 = np.sqrt(6.0)


@dataclass(frozen=True)
class WitnessParams:
    """Circulant parameters (a, b, c, d) with optional provenance metadata."""

    a: float
    b: float
    c: float
    d: float
    provenance: dict | None = None

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d])

    def validate(self, sum_tol: float = PARAM_SUM_TOL, neg_tol: float = PARAM_NEG_TOL):
        """Raise ValueError when the sum or sign constraints fail."""
        residual = self.a + self.b + self.c + self.d - 3.0
        if abs(residual) > sum_tol:
            raise ValueError(
                f"parameters must sum to 3, residual {residual:.3e}"
            )
        for name, value in zip("abcd", self.as_array()):
            if value < -neg_tol:
                raise ValueError(f"parameter {name} = {value:.3e} is negative")
            if value > 3.0 + neg_tol:
                raise ValueError(f"parameter {name} = {value:.3e} exceeds 3")


def abcd_from_euler(
    alpha: float, beta: float, gamma: float, parity: str = "proper"
) -> WitnessParams:
    """Closed-form circulant parameters of the twirled witness.

    The improper forms are the proper ones reflected through 3/4 entrywise,
    as negating the block negates every block contraction.
    """
    if parity not in ("proper", "improper"):
        raise ValueError(f"parity must be 'proper' or 'improper', got {parity!r}")
    sa, ca = np.sin(alpha), np.cos(alpha)
    sb, cb = np.sin(beta), np.cos(beta)
    sg, cg = np.sin(gamma), np.cos(gamma)
    shared = (sa * sg - ca * cb * cg - 3 * ca * cg + 3 * cb * sa * sg - 2 * cb) / 6.0
    if parity == "proper":
        a = (3 + np.cos(alpha + gamma) * (1 + cb) + cb) / 4.0
        b = (
            3
            + shared
            + (3 * cg * sa + 3 * ca * cb * sg + cb * cg * sa + ca * sg) / (2 * _S3)
            + (2 / (3 * _S2)) * sb * (2 * cg + ca)
            - (2 / _S6) * sa * sb
        ) / 4.0
        c = (
            3
            - (2 * ca * cb * cg - 2 * sa * sg + cb) / 3.0
            - (2 / (3 * _S2)) * sb * (cg - ca)
            + (2 / _S6) * sb * (sg + sa)
            - (cg * sa + ca * cb * sg - cb * cg * sa - ca * sg) / _S3
        ) / 4.0
        d = (
            3
            + shared
            - (3 * cb * cg * sa + 3 * ca * sg + cg * sa + ca * cb * sg) / (2 * _S3)
            - (2 / (3 * _S2)) * sb * (cg + 2 * ca)
            - (2 / _S6) * sg * sb
        ) / 4.0
    else:
        a = (3 - np.cos(alpha + gamma) * (1 + cb) - cb) / 4.0
        b = (
            3
            - shared
            - (3 * cg * sa + 3 * ca * cb * sg + cb * cg * sa + ca * sg) / (2 * _S3)
            - (2 / (3 * _S2)) * sb * (2 * cg + ca)
            + (2 / _S6) * sa * sb
        ) / 4.0
        c = (
            3
            + (2 * ca * cb * cg - 2 * sa * sg + cb) / 3.0
            + (2 / (3 * _S2)) * sb * (cg - ca)
            - (2 / _S6) * sb * (sg + sa)
            + (cg * sa + ca * cb * sg - cb * cg * sa - ca * sg) / _S3
        ) / 4.0
        d = (
            3
            - shared
            + (3 * cb * cg * sa + 3 * ca * sg + cg * sa + ca * cb * sg) / (2 * _S3)
            + (2 / (3 * _S2)) * sb * (cg + 2 * ca)
            + (2 / _S6) * sg * sb
        ) / 4.0
    provenance = {
        "kind": "euler",
        "alpha": float(alpha),
        "beta": float(beta),
        "gamma": float(gamma),
        "parity": parity,
    }
    return WitnessParams(float(a), float(b), float(c), float(d), provenance)


# Pre-twirl table: entry label -> {(row, col) into the 3x3 block: coefficient}.
# The a2 coefficient of R_23 is the audited correction; see errata.ERRATA.
_A2_R23_PRINTED = 1.0 / (6.0 * _S3)
_APPENDIX_COEFFS: dict[str, dict[tuple[int, int], float]] = {
    "a1": {(1, 1): 1 / 2, (1, 2): 1 / (2 * _S3), (1, 3): 1 / (2 * _S6),
           (2, 1): 1 / (2 * _S3), (2, 2): 1 / 6, (2, 3): 1 / (6 * _S2),
           (3, 1): 1 / (2 * _S6), (3, 2): 1 / (6 * _S2), (3, 3): 1 / 12},
    "a2": {(1, 1): 1 / 2, (1, 2): -1 / (2 * _S3), (1, 3): -1 / (2 * _S6),
           (2, 1): -1 / (2 * _S3), (2, 2): 1 / 6, (2, 3): 1 / (6 * _S2),
           (3, 1): -1 / (2 * _S6), (3, 2): 1 / (6 * _S2), (3, 3): 1 / 12},
    "a3": {(2, 2): 2 / 3, (2, 3): -1 / (3 * _S2),
           (3, 2): -1 / (3 * _S2), (3, 3): 1 / 12},
    "a4": {(3, 3): 9 / 12},
    "b1": {(1, 1): -1 / 2, (1, 2): 1 / (2 * _S3), (1, 3): 1 / (2 * _S6),
           (2, 1): -1 / (2 * _S3), (2, 2): 1 / 6, (2, 3): 1 / (6 * _S2),
           (3, 1): -1 / (2 * _S6), (3, 2): 1 / (6 * _S2), (3, 3): 1 / 12},
    "b2": {(1, 2): 1 / _S3, (1, 3): -1 / (2 * _S6), (2, 2): -1 / 3,
           (2, 3): 1 / (6 * _S2), (3, 2): -1 / (3 * _S2), (3, 3): 1 / 12},
    "b3": {(2, 3): 1 / _S2, (3, 3): -3 / 12},
    "b4": {(3, 1): -3 / (2 * _S6), (3, 2): -1 / (2 * _S2), (3, 3): -3 / 12},
    "c1": {(1, 2): -1 / _S3, (1, 3): 1 / (2 * _S6), (2, 2): -1 / 3,
           (2, 3): 1 / (6 * _S2), (3, 2): -1 / (3 * _S2), (3, 3): 1 / 12},
    "c2": {(1, 3): 3 / (2 * _S6), (2, 3): -1 / (2 * _S2), (3, 3): -3 / 12},
    "c3": {(2, 1): -1 / _S3, (2, 2): -1 / 3, (2, 3): -1 / (3 * _S2),
           (3, 1): 1 / (2 * _S6), (3, 2): 1 / (6 * _S2), (3, 3): 1 / 12},
    "c4": {(3, 1): 3 / (2 * _S6), (3, 2): -1 / (2 * _S2), (3, 3): -3 / 12},
    "d1": {(1, 3): -3 / (2 * _S6), (2, 3): -1 / (2 * _S2), (3, 3): -1 / 4},
    "d2": {(1, 1): -1 / 2, (1, 2): -1 / (2 * _S3), (1, 3): -1 / (2 * _S6),
           (2, 1): 1 / (2 * _S3), (2, 2): 1 / 6, (2, 3): 1 / (6 * _S2),
           (3, 1): 1 / (2 * _S6), (3, 2): 1 / (6 * _S2), (3, 3): 1 / 12},
    "d3": {(2, 1): 1 / _S3, (2, 2): -1 / 3, (2, 3): -1 / (3 * _S2),
           (3, 1): -1 / (2 * _S6), (3, 2): 1 / (6 * _S2), (3, 3): 1 / 12},
    "d4": {(3, 2): 1 / _S2, (3, 3): -3 / 12},
}

# label -> 0-based (row, col) position in the scaled stochastic matrix
_APPENDIX_POS: dict[str, tuple[int, int]] = {}
for _i in range(4):
    _APPENDIX_POS[f"a{_i + 1}"] = (_i, _i)
    _APPENDIX_POS[f"b{_i + 1}"] = (_i, (_i + 1) % 4)
    _APPENDIX_POS[f"c{_i + 1}"] = (_i, (_i + 2) % 4)
    _APPENDIX_POS[f"d{_i + 1}"] = (_i, (_i + 3) % 4)


def appendix_entries(block: np.ndarray, corrected: bool = True) -> dict[str, float]:
    """The 16 pre-twirl entries a_1..d_4 evaluated on a 3 x 3 block.

    With corrected=False the audited a_2 coefficient reverts to its printed
    value, for deviation studies.
    """
    block = np.asarray(block, dtype=float)
    if block.shape != (3, 3):
        raise ValueError(f"expected a 3 x 3 block, got shape {block.shape}")
    out: dict[str, float] = {}
    for label, coeffs in _APPENDIX_COEFFS.items():
        value = 0.75
        for (k, l), coeff in coeffs.items():
            if not corrected and label == "a2" and (k, l) == (2, 3):
                coeff = _A2_R23_PRINTED
            value += coeff * block[k - 1, l - 1]
        out[label] = float(value)
    return out


def appendix_matrix(block: np.ndarray, corrected: bool = True) -> np.ndarray:
    """Entries assembled into the scaled stochastic matrix (3 times phi)."""
    entries = appendix_entries(block, corrected=corrected)
    m = np.zeros((4, 4))
    for label, value in entries.items():
        m[_APPENDIX_POS[label]] = value
    return m


def witness_from_params(params: WitnessParams) -> Witness:
    """Assemble the circulant witness for validated parameters."""
    params.validate()
    vals = params.as_array()
    n = 4
    w = np.zeros((16, 16), dtype=complex)
    for i in range(n):
        for j in range(n):
            if i == j:
                block = np.diag([vals[(k - i) % 4] for k in range(4)]).astype(complex)
            else:
                block = -_unit(i, j, n)
            w += kron(_unit(i, j, n), block)
    return Witness(n=n, operator=w)


def params_from_witness(w: Witness, tol: float = 1e-10) -> WitnessParams:
    """Read (a, b, c, d) back from a circulant witness.

    Averages the cyclic diagonals of the diagonal blocks and checks that the
    witness actually has the circulant block structure within tol.
    """
    if w.n != 4:
        raise ValueError(f"parameter extraction is defined for n=4, got n={w.n}")
    op = w.operator
    diag = np.array([[op[4 * i + j, 4 * i + j].real for j in range(4)] for i in range(4)])
    vals = np.array([np.mean([diag[i, (i + s) % 4] for i in range(4)]) for s in range(4)])
    rebuilt = witness_from_params(WitnessParams(*map(float, vals)))
    dev = float(np.max(np.abs(op - rebuilt.operator)))
    if dev > tol:
        raise ValueError(f"witness is not circulant within {tol:.1e}: deviation {dev:.3e}")
    return WitnessParams(*map(float, vals), provenance={"kind": "extracted"})


@dataclass(frozen=True)
class N3Params:
    """Circulant parameters (a, b, c) of the three-dimensional analogue."""

    a: float
    b: float
    c: float

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c])


def n3_abc(alpha: float) -> N3Params:
    """Closed-form circulant parameters for a planar rotation by alpha.

    The triple satisfies a + b + c = 2 and bc = (1 - a)^2 identically, the
    ellipse of extreme positive maps in three dimensions.
    """
    a = (2.0 / 3.0) * (1.0 + np.cos(alpha))
    b = (2.0 / 3.0) * (1.0 - np.cos(alpha) / 2.0 - (_S3 / 2.0) * np.sin(alpha))
    c = (2.0 / 3.0) * (1.0 - np.cos(alpha) / 2.0 + (_S3 / 2.0) * np.sin(alpha))
    return N3Params(float(a), float(b), float(c))
