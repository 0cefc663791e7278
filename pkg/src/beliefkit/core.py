"""Frames, subset masks, and basic belief assignments.

A frame of discernment is an ordered tuple of labels; element ``i`` owns bit
``i``. Subsets are plain Python ints used as bit masks, so set algebra is
``&``, ``|``, ``^``, and ``frame.complement``; cardinality is
``mask.bit_count()``. A basic belief assignment (bba) is a sparse map from
focal masks to strictly positive masses summing to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateLabel,
    EmptyFrame,
    FrameTooLarge,
    MassSumInvalid,
    NegativeMass,
    UnknownLabel,
)

#: Masses at or below this are dropped as float dust.
EPS_MASS = 1e-12
#: Tolerance for "masses sum to 1" validation.
EPS_SUM = 1e-9
#: Hard cap so a mask always fits machine-word arithmetic.
MAX_FRAME_SIZE = 64

Mask = int


@dataclass(frozen=True)
class Frame:
    """Ordered frame of discernment; element index = bit position."""

    labels: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_index", MappingProxyType({s: i for i, s in enumerate(self.labels)})
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> Mask:
        return (1 << self.n) - 1

    def singleton(self, i: int) -> Mask:
        return 1 << i

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"label {label!r} is not in the frame") from None

    def complement(self, mask: Mask) -> Mask:
        return self.full_mask & ~mask

    def names(self, mask: Mask) -> tuple[str, ...]:
        """Labels of the elements in ``mask``, in frame order."""
        return tuple(s for i, s in enumerate(self.labels) if mask >> i & 1)

    def subsets(self) -> Iterator[Mask]:
        """All 2^n masks in ascending value order."""
        return iter(range(1 << self.n))


def make_frame(labels: Sequence[str], max_size: int = MAX_FRAME_SIZE) -> Frame:
    """Build a frame from distinct, non-empty labels (at most ``max_size``)."""
    labels = tuple(labels)
    if not labels:
        raise EmptyFrame("a frame needs at least one element")
    if len(labels) > max_size:
        raise FrameTooLarge(f"{len(labels)} elements exceeds the cap of {max_size}")
    seen = set()
    for s in labels:
        if not s:
            raise DuplicateLabel("empty label is not allowed")
        if s in seen:
            raise DuplicateLabel(f"label {s!r} appears more than once")
        seen.add(s)
    return Frame(labels)


def parse_subset(frame: Frame, names: Iterable[str]) -> Mask:
    """Mask with exactly the named bits set; duplicate names collapse."""
    mask = 0
    for s in names:
        mask |= 1 << frame.index_of(s)
    return mask


class MassFunction:
    """Sparse basic belief assignment: focal mask -> mass.

    Construction validates (non-negative masses, sum 1 within ``EPS_SUM``)
    and drops entries at or below ``EPS_MASS``, so a live instance never
    carries zero-mass or dust entries. Instances are immutable; share them
    freely across threads.
    """

    __slots__ = ("frame", "_table")

    def __init__(self, frame: Frame, table: Mapping[Mask, float]):
        full = frame.full_mask
        clean: dict[Mask, float] = {}
        for mask, mass in table.items():
            if mask & ~full:
                raise UnknownLabel(f"mask {mask:#x} has bits outside the frame")
            if mass < 0.0:
                raise NegativeMass(f"mass {mass!r} on mask {mask:#x} is negative")
            if mass > EPS_MASS:
                clean[mask] = mass
        total = math.fsum(clean.values())
        if abs(total - 1.0) > EPS_SUM:
            raise MassSumInvalid(f"masses sum to {total!r}, not 1")
        self.frame = frame
        self._table = clean

    # -- mapping-style access ------------------------------------------------

    def mass(self, mask: Mask) -> float:
        """Mass on ``mask`` (0.0 if not focal)."""
        return self._table.get(mask, 0.0)

    def items(self):
        return self._table.items()

    def focal_masks(self):
        return self._table.keys()

    def sorted_items(self) -> list[tuple[Mask, float]]:
        """Entries by ascending mask value: the canonical serialization order."""
        return sorted(self._table.items())

    @property
    def focal_count(self) -> int:
        return len(self._table)

    @property
    def mass_on_empty(self) -> float:
        return self._table.get(0, 0.0)

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, mask: Mask) -> bool:
        return mask in self._table

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self._table == other._table

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{{{','.join(self.frame.names(mask)) or '∅'}}}: {mass:.6g}"
            for mask, mass in self.sorted_items()
        )
        return f"MassFunction({parts})"


def make_bba(frame: Frame, entries: Iterable[tuple[Mask, float]]) -> MassFunction:
    """Build a bba from (mask, mass) pairs; duplicate masks accumulate."""
    table: dict[Mask, float] = {}
    for mask, mass in entries:
        if mass < 0.0:
            raise NegativeMass(f"mass {mass!r} on mask {mask:#x} is negative")
        table[mask] = table.get(mask, 0.0) + mass
    return MassFunction(frame, table)


def vacuous(frame: Frame) -> MassFunction:
    """The vacuous bba: all mass on the full frame."""
    return MassFunction(frame, {frame.full_mask: 1.0})
