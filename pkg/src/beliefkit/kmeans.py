"""k-means over focal elements with the symmetric-difference distance.

Centers are snapped to sharp subsets by a mass-weighted per-element
majority vote rather than left fuzzy, so the usual monotone-decrease
guarantee is lost; runs therefore stop on a repeated state, a detected
cycle, or an iteration cap, and the best iterate seen wins. Everything is
deterministic: ties in assignment go to the lowest center index after
sorting centers by ascending mask value, ties in the majority vote exclude
the element, and restarts draw their starting centers from a seeded RNG.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import Mask, MassFunction
from .errors import EmptyCluster, InvalidK
from .linear import ReductionReport, reduction_report


@dataclass(frozen=True)
class KMeansConfig:
    """Tuning for :func:`kmeans_reduce`.

    ``max_iterations`` defaults to k. ``seed`` only matters when
    ``restarts`` > 1; the first run always starts from the k heaviest focal
    elements. ``closed_world`` replaces a would-be empty center with the
    member element of greatest included mass.
    """

    k: int
    max_iterations: int | None = None
    restarts: int = 1
    seed: int = 0
    tie_rule: str = "lexicographic"
    closed_world: bool = False


@dataclass(frozen=True)
class ClusterState:
    """Final centers, the focal-element partition, and run statistics."""

    centers: tuple[Mask, ...]
    assignment: Mapping[Mask, int]
    objective: float
    iterations: int


def set_distance(a: Mask, b: Mask) -> int:
    """Symmetric-difference cardinality |A xor B| of two same-frame masks."""
    return (a ^ b).bit_count()


def cluster_center(members: Sequence[tuple[Mask, float]]) -> Mask:
    """Mass-majority center: element kept iff the member mass containing it
    strictly exceeds the member mass excluding it. Ties drop the element,
    so the center of a balanced cluster can be the empty set."""
    if not members:
        raise EmptyCluster("cannot take the center of an empty cluster")
    total = math.fsum(mass for _, mass in members)
    union = 0
    for mask, _ in members:
        union |= mask
    center = 0
    rem = union
    while rem:
        bit = rem & -rem
        inside = math.fsum(mass for mask, mass in members if mask & bit)
        if inside > total - inside:
            center |= bit
        rem ^= bit
    return center


def _closed_world_center(members: Sequence[tuple[Mask, float]], n: int) -> Mask:
    """Majority center, but an empty result re-adds the single element of
    greatest included mass (ties to the lowest element index)."""
    center = cluster_center(members)
    if center:
        return center
    best_bit, best_mass = 0, -1.0
    for i in range(n):
        bit = 1 << i
        inside = math.fsum(mass for mask, mass in members if mask & bit)
        if inside > best_mass:
            best_bit, best_mass = bit, inside
    return best_bit


def _assignment_pass(
    focals: Sequence[tuple[Mask, float]], centers: Sequence[Mask]
) -> list[int]:
    """Nearest-center index per focal element; ties to the lowest index."""
    out = []
    for mask, _ in focals:
        best_j, best_d = 0, (mask ^ centers[0]).bit_count()
        for j in range(1, len(centers)):
            d = (mask ^ centers[j]).bit_count()
            if d < best_d:
                best_j, best_d = j, d
        out.append(best_j)
    return out


def _run(
    focals: Sequence[tuple[Mask, float]],
    initial: Sequence[Mask],
    k: int,
    max_iterations: int,
    n: int,
    closed_world: bool,
) -> tuple[float, tuple[Mask, ...], list[int], int]:
    """One k-means run; returns the smallest-objective iterate seen."""
    center_rule = _closed_world_center if closed_world else (
        lambda members, _n: cluster_center(members)
    )
    centers = sorted(initial)
    seen: set[tuple[tuple[Mask, ...], tuple[int, ...]]] = set()
    best: tuple[float, tuple[Mask, ...], list[int]] | None = None
    iterations = 0
    for step in range(1, max_iterations + 1):
        iterations = step
        assignment = _assignment_pass(focals, centers)
        clusters: list[list[tuple[Mask, float]]] = [[] for _ in range(k)]
        for (mask, mass), j in zip(focals, assignment):
            clusters[j].append((mask, mass))
        new_centers = tuple(
            center_rule(clusters[j], n) if clusters[j] else centers[j]
            for j in range(k)
        )
        objective = math.fsum(
            mass * (mask ^ new_centers[j]).bit_count()
            for (mask, mass), j in zip(focals, assignment)
        )
        if best is None or objective < best[0]:
            best = (objective, new_centers, assignment)
        state = (tuple(centers), tuple(assignment))
        if state in seen:
            break
        seen.add(state)
        centers = sorted(new_centers)
    assert best is not None
    return best[0], best[1], best[2], iterations


def kmeans_reduce(
    m: MassFunction, cfg: KMeansConfig
) -> tuple[MassFunction, ClusterState, ReductionReport]:
    """Reduce ``m`` to at most ``cfg.k`` focal elements.

    The first run starts from the k heaviest focal elements (mass ties by
    ascending mask value); each extra restart starts from a seeded random
    k-subset of the focal set, and the run with the smallest final
    objective wins (earlier run on ties). Cluster masses gather onto their
    centers; duplicate centers merge, so the result can be smaller than k.
    """
    if not 1 <= cfg.k <= m.focal_count:
        raise InvalidK(f"k={cfg.k} outside 1..{m.focal_count}")
    if cfg.tie_rule != "lexicographic":
        raise ValueError(f"unsupported tie rule {cfg.tie_rule!r}")
    max_iterations = cfg.max_iterations if cfg.max_iterations is not None else cfg.k
    if max_iterations < 1:
        raise ValueError("max_iterations must be at least 1")
    if cfg.restarts < 1:
        raise ValueError("restarts must be at least 1")

    focals = m.sorted_items()
    by_weight = sorted(focals, key=lambda kv: (-kv[1], kv[0]))
    starts = [[mask for mask, _ in by_weight[: cfg.k]]]
    if cfg.restarts > 1:
        rng = random.Random(cfg.seed)
        pool = [mask for mask, _ in focals]
        for _ in range(cfg.restarts - 1):
            starts.append(rng.sample(pool, cfg.k))

    n = m.frame.n
    best = None
    for initial in starts:
        result = _run(focals, initial, cfg.k, max_iterations, n, cfg.closed_world)
        if best is None or result[0] < best[0]:
            best = result
    objective, centers, assignment, iterations = best

    table: dict[Mask, float] = {}
    for (mask, mass), j in zip(focals, assignment):
        c = centers[j]
        table[c] = table.get(c, 0.0) + mass
    reduced = MassFunction(m.frame, table)
    state = ClusterState(
        centers=centers,
        assignment={mask: j for (mask, _), j in zip(focals, assignment)},
        objective=objective,
        iterations=iterations,
    )
    return reduced, state, reduction_report(m, reduced)
