"""Registry of corrections applied to the transcribed reference formulas.

Each record documents one coefficient or formula whose printed form fails an
independent numerical cross-check, together with the corrected form the
package actually uses. The uncorrected variants remain available for audit
(see family.appendix_matrix and the test suite).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["ERRATA", "Erratum", "errata_ids"]


@dataclass(frozen=True)
class Erratum:
    identifier: str
    location: str
    printed: str
    corrected: str
    printed_value: float | None
    corrected_value: float | None
    note: str


ERRATA: tuple[Erratum, ...] = (
    Erratum(
        identifier="appendix-a2-r23",
        location="pre-twirl diagonal entry a_2, coefficient of R_23",
        printed="1/(6*sqrt(3))",
        corrected="1/(6*sqrt(2))",
        printed_value=1.0 / (6.0 * np.sqrt(3.0)),
        corrected_value=1.0 / (6.0 * np.sqrt(2.0)),
        note=(
            "The stochastic-matrix oracle fixes this coefficient to "
            "<2|d_2|2><2|d_3|2> = 1/(6*sqrt(2)); the printed table entry is "
            "the only one of the 16 that disagrees."
        ),
    ),
    Erratum(
        identifier="spa-critical-p-sign",
        location="critical mixing weight p* of the structural physical approximation",
        printed="4*(a-3)/(3+4*(a-3))",
        corrected="4*(3-a)/(15-4*a)",
        printed_value=None,
        corrected_value=None,
        note=(
            "The printed form exceeds 1 on the whole family (value 1.6 at "
            "a=1); the corrected form follows from the minimal witness "
            "eigenvalue (a-3)/12 and lies in [2/3, 4/5]."
        ),
    ),
    Erratum(
        identifier="spa-normalization-sign",
        location="prefactor of the separable decomposition at the critical mixing weight",
        printed="1/(4*(3+4*(a-3)))",
        corrected="1/(4*(15-4*a))",
        printed_value=None,
        corrected_value=None,
        note=(
            "Same sign slip as the critical weight: the printed prefactor is "
            "negative on the family, the corrected one reproduces the mixed "
            "operator exactly."
        ),
    ),
)


def errata_ids() -> list[str]:
    """Identifiers of all recorded corrections."""
    return [e.identifier for e in ERRATA]
