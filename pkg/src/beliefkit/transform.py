"""Dense fast Möbius transforms between mass and commonality vectors.

The dense representation indexes an array of 2^n reals by mask value. The
superset zeta transform and its signed inversion each run in n in-place
passes over the array (O(n 2^n)), one bit per pass. This path exists as a
cross-check for the sparse conjunctive rule; n is capped accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import EPS_MASS, Frame, MassFunction
from .errors import FrameTooLargeForDense, KindMismatch, NegativeMass

#: 2^20 doubles = 8 MB per vector; enough for a desk-scale cross-check.
DENSE_CAP = 20

MASS = "mass"
COMMONALITY = "commonality"


@dataclass(frozen=True)
class DenseMassVector:
    """Length-2^n array of reals, tagged as mass or commonality domain."""

    frame: Frame
    values: np.ndarray
    kind: str

    def __post_init__(self) -> None:
        if len(self.values) != 1 << self.frame.n:
            raise ValueError("dense vector length must be exactly 2^n")


def to_dense(m: MassFunction) -> DenseMassVector:
    """Scatter a sparse bba into a dense mass vector."""
    n = m.frame.n
    if n > DENSE_CAP:
        raise FrameTooLargeForDense(f"dense vectors are capped at n={DENSE_CAP}")
    values = np.zeros(1 << n)
    for mask, mass in m.items():
        values[mask] = mass
    return DenseMassVector(m.frame, values, MASS)


def q_from_m(v: DenseMassVector) -> DenseMassVector:
    """Superset zeta transform: q[A] = sum of m[B] over B >= A."""
    if v.kind != MASS:
        raise KindMismatch(f"expected a mass vector, got {v.kind!r}")
    n = v.frame.n
    out = v.values.copy()
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 0, :] += view[:, 1, :]
    return DenseMassVector(v.frame, out, COMMONALITY)


def m_from_q(v: DenseMassVector) -> DenseMassVector:
    """Signed Möbius inversion over the superset lattice; exact inverse of
    :func:`q_from_m`."""
    if v.kind != COMMONALITY:
        raise KindMismatch(f"expected a commonality vector, got {v.kind!r}")
    n = v.frame.n
    out = v.values.copy()
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 0, :] -= view[:, 1, :]
    return DenseMassVector(v.frame, out, MASS)


def from_dense(v: DenseMassVector) -> MassFunction:
    """Gather a dense mass vector back into a sparse bba.

    Values in (-EPS_MASS, EPS_MASS] are treated as inversion noise and
    dropped; anything below -EPS_MASS is a real negative and rejected.
    """
    if v.kind != MASS:
        raise KindMismatch(f"expected a mass vector, got {v.kind!r}")
    low = float(v.values.min())
    if low < -EPS_MASS:
        raise NegativeMass(f"dense mass vector has a negative entry {low!r}")
    table = {
        int(mask): float(mass)
        for mask, mass in enumerate(v.values)
        if mass > EPS_MASS
    }
    return MassFunction(v.frame, table)
