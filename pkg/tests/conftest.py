"""Shared generators for random bbas, as plain helpers and hypothesis strategies."""

from __future__ import annotations

import random

from hypothesis import strategies as st

import beliefkit as bk


def frame_of(n: int) -> bk.Frame:
    return bk.make_frame([f"e{i}" for i in range(n)])


def random_bba(
    rng: random.Random, frame: bk.Frame, size: int, allow_empty: bool = False
) -> bk.MassFunction:
    """Random bba with `size` distinct focal elements and no dust masses."""
    lo = 0 if allow_empty else 1
    size = min(size, (1 << frame.n) - lo)
    masks = rng.sample(range(lo, 1 << frame.n), size)
    weights = [rng.random() + 0.05 for _ in masks]
    total = sum(weights)
    return bk.make_bba(frame, [(m, w / total) for m, w in zip(masks, weights)])


@st.composite
def bbas(draw, min_n=2, max_n=6, max_size=8, allow_empty=False):
    n = draw(st.integers(min_n, max_n))
    frame = frame_of(n)
    lo = 0 if allow_empty else 1
    size = draw(st.integers(1, min(max_size, (1 << n) - lo)))
    masks = draw(
        st.lists(
            st.integers(lo, (1 << n) - 1), min_size=size, max_size=size, unique=True
        )
    )
    weights = draw(
        st.lists(st.floats(0.05, 1.0), min_size=size, max_size=size)
    )
    total = sum(weights)
    return bk.make_bba(frame, [(m, w / total) for m, w in zip(masks, weights)])


@st.composite
def bba_pairs(draw, min_n=2, max_n=6, max_size=8, allow_empty=False):
    """Two bbas over one shared frame."""
    n = draw(st.integers(min_n, max_n))
    frame = frame_of(n)
    lo = 0 if allow_empty else 1
    out = []
    for _ in range(2):
        size = draw(st.integers(1, min(max_size, (1 << n) - lo)))
        masks = draw(
            st.lists(
                st.integers(lo, (1 << n) - 1),
                min_size=size,
                max_size=size,
                unique=True,
            )
        )
        weights = draw(st.lists(st.floats(0.05, 1.0), min_size=size, max_size=size))
        total = sum(weights)
        out.append(
            bk.make_bba(frame, [(m, w / total) for m, w in zip(masks, weights)])
        )
    return out[0], out[1]


def table_distance(a: bk.MassFunction, b: bk.MassFunction) -> float:
    """Max absolute mass difference over the union of focal sets."""
    masks = set(a.focal_masks()) | set(b.focal_masks())
    return max(abs(a.mass(k) - b.mass(k)) for k in masks) if masks else 0.0
