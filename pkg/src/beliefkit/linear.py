"""Linear-algebraic focal-set reductions.

Two families live here. The least committed isopignistic keeps only the
pignistic probability and rebuilds the unique consonant bba carrying it, at
most n focal elements via an O(n) band formula. The mixed reductions keep
the pignistic probability plus one more body of evidence (plausibility or
belief) on designated query sets, by solving a square constraint system
over 2n-1 candidate focal elements with a dense partial-pivot solve.

Solutions are never clamped: a negative mass beyond tolerance raises
:class:`NegativeMassSolution` with the signed vector attached, because
silently projecting the solution would break the preserved-body contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import EPS_MASS, Frame, Mask, MassFunction, make_bba
from .errors import (
    ArityMismatch,
    DuplicateCandidate,
    EmptySetFocal,
    NegativeMassSolution,
    NotSorted,
    SingularSystem,
    TotalConflict,
)
from . import evidence
from .evidence import PignisticVector, betp_vector

#: A solution component below this is a genuine negative mass, not noise.
EPS_NEG = 1e-9
#: Smallest/largest pivot ratio below which the system counts as singular.
PIVOT_RATIO = 1e-10

_BODY_FUNCS = {
    "bel": evidence.bel,
    "pl": evidence.pl,
    "q": evidence.q,
    "betp": evidence.betp,
}


@dataclass(frozen=True)
class ReductionReport:
    """How lossy a reduction was, outside what it contracted to preserve."""

    input_size: int
    output_size: int
    betp_deviation: float
    secondary_deviation: float
    negative_mass_flag: bool = False


@dataclass(frozen=True)
class ConstraintSystem:
    """Square system: one unit-mass contribution column per candidate.

    ``matrix[r, c]`` is what one unit of mass on ``candidates[c]`` adds to
    the body of evidence named by ``labels[r]``; ``rhs[r]`` is that body
    evaluated on the bba being reduced.
    """

    frame: Frame
    candidates: tuple[Mask, ...]
    matrix: np.ndarray
    rhs: np.ndarray
    labels: tuple[tuple[str, Mask], ...]
    source_size: int


def bet_inverse_apply(p: PignisticVector | Sequence[float]) -> list[float]:
    """Masses on the nested chain A_1 ... A_n from sorted pignistic values.

    The map from chain masses to pignistic values is an upper-triangular
    band system, so its inverse is the O(n) formula
    ``y_i = i * (p_i - p_{i+1})`` with ``p_{n+1} = 0``.
    """
    values = list(p.sorted_values) if isinstance(p, PignisticVector) else list(p)
    for a, b in zip(values, values[1:]):
        if a < b:
            raise NotSorted("pignistic values must be sorted in descending order")
    n = len(values)
    return [(i + 1) * (values[i] - (values[i + 1] if i + 1 < n else 0.0)) for i in range(n)]


def _prefix_chain(order: Sequence[int]) -> list[Mask]:
    """Masks A_1 ... A_n: growing prefixes of the sorted element order."""
    chain = []
    mask = 0
    for i in order:
        mask |= 1 << i
        chain.append(mask)
    return chain


def least_committed_isopignistic(m: MassFunction) -> MassFunction:
    """The consonant bba with the same pignistic probability as ``m``.

    Among all bbas sharing betP with ``m`` it maximizes plausibility
    everywhere; its focal elements form a nested chain, so there are at
    most n of them. Cost is O(n (log n + |m|)).
    """
    if m.mass_on_empty > 0.0:
        raise EmptySetFocal("isopignistic reduction requires m(empty set) = 0")
    p = betp_vector(m)
    masses = bet_inverse_apply(p.sorted_values)
    chain = _prefix_chain(p.order)
    return make_bba(m.frame, zip(chain, masses))


def _unit_contribution(kind: str, query: Mask, cand: Mask) -> float:
    if kind == "betp":
        if cand == 0:
            return 0.0
        return (query & cand).bit_count() / cand.bit_count()
    if kind == "pl":
        return 1.0 if cand & query else 0.0
    if kind == "bel":
        return 1.0 if cand and cand & ~query == 0 else 0.0
    if kind == "q":
        return 1.0 if cand & query == query else 0.0
    raise ValueError(f"unknown body of evidence {kind!r}")


def build_constraint_system(
    m: MassFunction,
    candidates: Sequence[Mask],
    constraints: Sequence[tuple[str, Mask]],
) -> ConstraintSystem:
    """Assemble the square system tying candidate masses to target values."""
    candidates = tuple(candidates)
    if len(set(candidates)) != len(candidates):
        raise DuplicateCandidate("candidate focal elements must be distinct")
    if len(constraints) != len(candidates):
        raise ArityMismatch(
            f"{len(constraints)} constraints for {len(candidates)} candidates"
        )
    size = len(candidates)
    matrix = np.empty((size, size))
    rhs = np.empty(size)
    for r, (kind, query) in enumerate(constraints):
        body = _BODY_FUNCS[kind]
        rhs[r] = body(m, query)
        for c, cand in enumerate(candidates):
            matrix[r, c] = _unit_contribution(kind, query, cand)
    return ConstraintSystem(
        frame=m.frame,
        candidates=candidates,
        matrix=matrix,
        rhs=rhs,
        labels=tuple((kind, query) for kind, query in constraints),
        source_size=m.focal_count,
    )


def _solve_partial_pivot(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Gaussian elimination with partial pivoting on a copy of the system."""
    a = np.array(matrix, dtype=float)
    b = np.array(rhs, dtype=float)
    size = len(b)
    pivots = np.empty(size)
    for col in range(size):
        p = col + int(np.argmax(np.abs(a[col:, col])))
        pivots[col] = abs(a[p, col])
        if pivots[col] == 0.0:
            raise SingularSystem(f"zero pivot in column {col}")
        if p != col:
            a[[col, p]] = a[[p, col]]
            b[[col, p]] = b[[p, col]]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= np.outer(factors, a[col, col:])
        b[col + 1 :] -= factors * b[col]
    if pivots.min() < PIVOT_RATIO * pivots.max():
        raise SingularSystem(
            f"pivot ratio {pivots.min() / pivots.max():.3e} below {PIVOT_RATIO:.0e}"
        )
    x = np.empty(size)
    for r in range(size - 1, -1, -1):
        x[r] = (b[r] - a[r, r + 1 :] @ x[r + 1 :]) / a[r, r]
    return x


def solve_reduction(sys: ConstraintSystem) -> tuple[MassFunction, ReductionReport]:
    """Solve the system and assemble the reduced bba plus its report."""
    y = _solve_partial_pivot(sys.matrix, sys.rhs)
    low = float(y.min())
    if low < -EPS_NEG:
        raise NegativeMassSolution(
            f"solution has negative mass {low!r}", y.tolist(), sys.candidates
        )
    table = {
        cand: float(mass)
        for cand, mass in zip(sys.candidates, y)
        if mass > EPS_MASS
    }
    reduced = MassFunction(sys.frame, table)
    betp_dev = 0.0
    secondary_dev = 0.0
    for r, (kind, query) in enumerate(sys.labels):
        dev = abs(_BODY_FUNCS[kind](reduced, query) - float(sys.rhs[r]))
        if kind == "betp":
            betp_dev = max(betp_dev, dev)
        else:
            secondary_dev = max(secondary_dev, dev)
    report = ReductionReport(
        input_size=sys.source_size,
        output_size=reduced.focal_count,
        betp_deviation=betp_dev,
        secondary_deviation=secondary_dev,
        negative_mass_flag=bool(low < -EPS_MASS),
    )
    return reduced, report


def _sorted_singletons_and_chain(m: MassFunction) -> tuple[list[Mask], list[Mask]]:
    if m.mass_on_empty > 0.0:
        raise EmptySetFocal("mixed reductions require m(empty set) = 0")
    if m.frame.n < 2:
        raise ValueError("mixed reductions need a frame with at least 2 elements")
    p = betp_vector(m)
    singletons = [1 << i for i in p.order]
    return singletons, _prefix_chain(p.order)


def reduce_betp_pl(m: MassFunction) -> tuple[MassFunction, ReductionReport]:
    """At most 2n-1 focal elements keeping betP on every singleton and pl
    on all singletons except the top-ranked one.

    Candidates are the non-top singletons plus the pignistic prefix chain;
    the top singleton coincides with the first chain set, which is why one
    candidate and one pl constraint drop out.
    """
    singletons, chain = _sorted_singletons_and_chain(m)
    candidates = singletons[1:] + chain
    constraints = [("betp", s) for s in singletons] + [
        ("pl", s) for s in singletons[1:]
    ]
    return solve_reduction(build_constraint_system(m, candidates, constraints))


def reduce_betp_bel(m: MassFunction) -> tuple[MassFunction, ReductionReport]:
    """At most 2n-1 focal elements keeping betP on every singleton and bel
    on the coatoms of all elements except the bottom-ranked one.

    Candidates are those coatoms plus the pignistic prefix chain; the
    bottom element's coatom equals the next-to-last chain set, so it drops
    out together with its bel constraint.
    """
    singletons, chain = _sorted_singletons_and_chain(m)
    full = m.frame.full_mask
    coatoms = [full & ~s for s in singletons]
    candidates = coatoms[:-1] + chain
    constraints = [("betp", s) for s in singletons] + [
        ("bel", c) for c in coatoms[:-1]
    ]
    return solve_reduction(build_constraint_system(m, candidates, constraints))


def reduction_report(
    m: MassFunction,
    reduced: MassFunction,
    secondary: Sequence[tuple[str, Mask]] = (),
) -> ReductionReport:
    """Deviation report for reductions built outside a constraint system.

    betP deviation is measured over every singleton; ``secondary`` lists
    extra (body kind, query) pairs to compare. Reports NaN for betP when
    either side is total conflict.
    """
    try:
        before = betp_vector(m).values
        after = betp_vector(reduced).values
        betp_dev = max(abs(a - b) for a, b in zip(before, after))
    except TotalConflict:
        betp_dev = math.nan
    secondary_dev = 0.0
    for kind, query in secondary:
        body = _BODY_FUNCS[kind]
        secondary_dev = max(secondary_dev, abs(body(m, query) - body(reduced, query)))
    return ReductionReport(
        input_size=m.focal_count,
        output_size=reduced.focal_count,
        betp_deviation=betp_dev,
        secondary_deviation=secondary_dev,
    )
