"""The non-normalized conjunctive rule over sparse focal sets.

Mass on the empty set is conflict (or an open world) and is carried in the
result like any other focal element; no normalization is offered. The cost
is O(n |m1| |m2|): only intersections of actual focal pairs are formed,
never the 2^n non-focal subsets.
"""

from __future__ import annotations

from typing import Sequence

from .core import MassFunction
from .errors import EmptyInput, FrameMismatch
from .transform import from_dense, m_from_q, q_from_m, to_dense, COMMONALITY, DenseMassVector


def conjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Combine two bbas: masses of intersecting focal pairs accumulate."""
    if m1.frame != m2.frame:
        raise FrameMismatch("operands are defined on different frames")
    pairs2 = list(m2.items())
    table: dict[int, float] = {}
    get = table.get
    for b, vb in m1.items():
        for c, vc in pairs2:
            k = b & c
            table[k] = get(k, 0.0) + vb * vc
    return MassFunction(m1.frame, table)


def conjunctive_many(ms: Sequence[MassFunction]) -> MassFunction:
    """Left fold of the conjunctive rule; associativity makes the order
    irrelevant up to float noise."""
    if not ms:
        raise EmptyInput("need at least one bba to combine")
    acc = ms[0]
    for m in ms[1:]:
        acc = conjunctive(acc, m)
    return acc


def conjunctive_via_q(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Same combination through the commonality domain.

    Commonalities multiply pointwise under the conjunctive rule, so this is
    zeta transform, product, Möbius inversion: O(n 2^n), independent of
    focal counts. Cross-check path for :func:`conjunctive`.
    """
    if m1.frame != m2.frame:
        raise FrameMismatch("operands are defined on different frames")
    q1 = q_from_m(to_dense(m1))
    q2 = q_from_m(to_dense(m2))
    product = DenseMassVector(m1.frame, q1.values * q2.values, COMMONALITY)
    return from_dense(m_from_q(product))
