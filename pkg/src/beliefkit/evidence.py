"""Bodies of evidence computed by iterating focal elements only.

Each query costs O(|m|) mask operations instead of the O(2^n) a powerset
scan would take; the brute-force counterparts live in :mod:`beliefkit.oracle`
and exist purely to cross-check these.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Mask, MassFunction
from .errors import TotalConflict


def bel(m: MassFunction, a: Mask) -> float:
    """Belief: total mass of non-empty focal subsets of ``a``."""
    return sum(v for b, v in m.items() if b and b & ~a == 0)


def pl(m: MassFunction, a: Mask) -> float:
    """Plausibility: total mass of focal sets meeting ``a``."""
    return sum(v for b, v in m.items() if b & a)


def q(m: MassFunction, a: Mask) -> float:
    """Commonality: total mass of focal supersets of ``a``."""
    return sum(v for b, v in m.items() if b & a == a)


def betp(m: MassFunction, a: Mask) -> float:
    """Pignistic probability of ``a``.

    Each focal mass is split uniformly over its elements and the result is
    renormalized by 1/(1 - m(empty)). Raises :class:`TotalConflict` when all
    mass sits on the empty set.
    """
    denom = 1.0 - m.mass_on_empty
    if denom <= 0.0:
        raise TotalConflict("m(empty set) = 1, pignistic probability undefined")
    acc = sum(
        (a & b).bit_count() / b.bit_count() * v for b, v in m.items() if b
    )
    return acc / denom


@dataclass(frozen=True)
class PignisticVector:
    """Per-element pignistic probabilities plus a descending sort order.

    ``values[i]`` is betP of element ``i`` (frame order); ``order`` lists the
    element indices by descending probability, ties broken by ascending
    index so downstream chains are deterministic.
    """

    values: tuple[float, ...]
    order: tuple[int, ...]

    @property
    def sorted_values(self) -> tuple[float, ...]:
        return tuple(self.values[i] for i in self.order)


def betp_vector(m: MassFunction) -> PignisticVector:
    """All singleton pignistic probabilities in one O(n|m|) scatter pass."""
    denom = 1.0 - m.mass_on_empty
    if denom <= 0.0:
        raise TotalConflict("m(empty set) = 1, pignistic probability undefined")
    n = m.frame.n
    values = [0.0] * n
    for b, v in m.items():
        if not b:
            continue
        share = v / b.bit_count()
        rem = b
        while rem:
            i = (rem & -rem).bit_length() - 1
            values[i] += share
            rem &= rem - 1
    if denom != 1.0:
        values = [v / denom for v in values]
    order = sorted(range(n), key=lambda i: (-values[i], i))
    return PignisticVector(tuple(values), tuple(order))
