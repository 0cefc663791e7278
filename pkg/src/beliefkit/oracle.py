"""Brute-force powerset reference implementations.

Everything here deliberately walks all 2^n subsets (vectorized with numpy,
but still the full enumeration) so it shares no code path with the sparse
focal-set implementations it is used to verify. Caps on n keep test suites
fast; they are oracle limits, not library limits.
"""

from __future__ import annotations

import random

import numpy as np

from .core import EPS_MASS, Mask, MassFunction, make_bba
from .errors import EmptySetFocal, FrameTooLargeForOracle, TotalConflict
from .evidence import betp_vector

ORACLE_BODY_CAP = 12
ORACLE_COMBINE_CAP = 10
SAMPLER_CAP = 8


def _dense(m: MassFunction) -> np.ndarray:
    v = np.zeros(1 << m.frame.n)
    for mask, mass in m.items():
        v[mask] = mass
    return v


def oracle_body(m: MassFunction, kind: str, a: Mask) -> float:
    """Evaluate bel/pl/q/betp by scanning every subset of the frame."""
    n = m.frame.n
    if n > ORACLE_BODY_CAP:
        raise FrameTooLargeForOracle(f"oracle_body is capped at n={ORACLE_BODY_CAP}")
    v = _dense(m)
    masks = np.arange(1 << n, dtype=np.uint64)
    a_ = np.uint64(a)
    if kind == "bel":
        keep = ((masks & ~a_) == 0) & (masks != 0)
        return float(v[keep].sum())
    if kind == "pl":
        keep = (masks & a_) != 0
        return float(v[keep].sum())
    if kind == "q":
        keep = (masks & a_) == a_
        return float(v[keep].sum())
    if kind == "betp":
        denom = 1.0 - float(v[0])
        if denom <= 0.0:
            raise TotalConflict("m(empty set) = 1")
        sizes = np.bitwise_count(masks[1:]).astype(float)
        overlaps = np.bitwise_count(masks[1:] & a_).astype(float)
        return float((overlaps / sizes * v[1:]).sum()) / denom
    raise ValueError(f"unknown body of evidence {kind!r}")


def oracle_conjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Conjunctive rule over all 2^n x 2^n subset pairs, focal or not."""
    if m1.frame != m2.frame:
        raise ValueError("operands must share a frame")
    n = m1.frame.n
    if n > ORACLE_COMBINE_CAP:
        raise FrameTooLargeForOracle(
            f"oracle_conjunctive is capped at n={ORACLE_COMBINE_CAP}"
        )
    v1, v2 = _dense(m1), _dense(m2)
    masks = np.arange(1 << n, dtype=np.uint64)
    inter = masks[:, None] & masks[None, :]
    acc = np.zeros(1 << n)
    np.add.at(acc, inter.ravel(), np.outer(v1, v2).ravel())
    return make_bba(m1.frame, [(int(k), float(acc[k])) for k in range(1 << n)])


def sample_isopignistic(m: MassFunction, seed: int, moves: int) -> MassFunction:
    """Random bba with the same pignistic probability as ``m``.

    Starts from betP placed on the singletons (itself isopignistic) and
    applies ``moves`` random transfers: pick a set B with |B| = b >= 2 and
    shift delta/b of mass from each singleton of B onto B, which changes no
    per-element pignistic value. Moves that would drive a singleton negative
    are skipped. The output is re-verified before returning.
    """
    if m.mass_on_empty > 0.0:
        raise EmptySetFocal("sampler requires m(empty set) = 0")
    n = m.frame.n
    if n > SAMPLER_CAP:
        raise FrameTooLargeForOracle(f"sampler is capped at n={SAMPLER_CAP}")
    p = betp_vector(m)
    table: dict[Mask, float] = {}
    for i, value in enumerate(p.values):
        if value > 0.0:
            table[1 << i] = value
    rng = random.Random(seed)
    # moves keep singleton remainders >= 1e-9 and move at least 1e-6, so no
    # entry ever lands in the dust band whose removal would nudge betP
    for _ in range(moves):
        if n < 2:
            break
        b = rng.randint(2, n)
        members = rng.sample(range(n), b)
        low = min(table.get(1 << i, 0.0) for i in members)
        cap = b * (low - 1e-9)
        if cap <= 1e-6:
            continue
        delta = rng.uniform(1e-6, cap)
        share = delta / b
        set_mask = 0
        for i in members:
            table[1 << i] -= share
            set_mask |= 1 << i
        table[set_mask] = table.get(set_mask, 0.0) + delta
    out = make_bba(m.frame, table.items())
    drift = max(
        abs(a - b) for a, b in zip(betp_vector(out).values, p.values)
    )
    if drift > 1e-12:
        raise AssertionError(f"sampler drifted betP by {drift!r}")
    return out
