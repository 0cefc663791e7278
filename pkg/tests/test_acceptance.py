"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with `pytest tests/test_acceptance.py -s` to see them
as they happen). Tolerances are fixed here, not tuned elsewhere."""

import math
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest

import beliefkit as bk
from beliefkit.errors import NegativeMassSolution
from beliefkit.kmeans import _assignment_pass

from conftest import frame_of, random_bba, table_distance


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"[acceptance] {name}: FAIL")
        raise
    print(f"[acceptance] {name}: PASS")


def explosion_sources(n):
    frame = frame_of(n)
    full = frame.full_mask
    return [
        bk.make_bba(frame, [(full, 0.5), (full & ~(1 << i), 0.5)]) for i in range(n)
    ]


def test_c1_explosion_reproduction():
    with criterion("C1 explosion reproduction"):
        t0 = time.perf_counter()
        out = bk.conjunctive_many(explosion_sources(12))
        elapsed = time.perf_counter() - t0
        assert out.focal_count == 4096
        expected = 2.0**-12
        assert max(abs(v - expected) for _, v in out.items()) <= 1e-12
        assert elapsed < 5.0


def test_c2_oracle_equivalence():
    with criterion("C2 oracle equivalence"):
        rng = random.Random(20_240_901)
        worst_body = 0.0
        for _ in range(200):
            n = rng.randint(2, 8)
            frame = frame_of(n)
            size = rng.randint(1, min(32, (1 << n) - 1))
            m = random_bba(rng, frame, size, allow_empty=True)
            queries = [rng.randrange(1 << n) for _ in range(12)] + [0, frame.full_mask]
            for a in queries:
                for kind, fast in (
                    ("bel", bk.bel),
                    ("pl", bk.pl),
                    ("q", bk.q),
                ):
                    worst_body = max(
                        worst_body, abs(fast(m, a) - bk.oracle_body(m, kind, a))
                    )
                if m.mass_on_empty < 1.0:
                    worst_body = max(
                        worst_body, abs(bk.betp(m, a) - bk.oracle_body(m, "betp", a))
                    )
        assert worst_body <= 1e-12

        worst_comb = 0.0
        for _ in range(100):
            n = rng.randint(2, 8)
            frame = frame_of(n)
            m1 = random_bba(rng, frame, rng.randint(1, 16), allow_empty=True)
            m2 = random_bba(rng, frame, rng.randint(1, 16), allow_empty=True)
            worst_comb = max(
                worst_comb,
                table_distance(bk.conjunctive(m1, m2), bk.oracle_conjunctive(m1, m2)),
            )
        assert worst_comb <= 1e-12


def test_c3_commonality_round_trip_and_q_combination():
    with criterion("C3 commonality round trip and q-domain combination"):
        rng = random.Random(33)
        for n in (2, 4, 8, 12):
            frame = frame_of(n)
            m = random_bba(
                rng, frame, rng.randint(1, min(40, (1 << n) - 1)), allow_empty=True
            )
            dense = bk.to_dense(m)
            back = bk.m_from_q(bk.q_from_m(dense))
            assert float(np.abs(back.values - dense.values).max()) <= 1e-12
        for _ in range(40):
            n = rng.randint(2, 10)
            frame = frame_of(n)
            m1 = random_bba(rng, frame, rng.randint(1, 20), allow_empty=True)
            m2 = random_bba(rng, frame, rng.randint(1, 20), allow_empty=True)
            assert table_distance(
                bk.conjunctive_via_q(m1, m2), bk.conjunctive(m1, m2)
            ) <= 1e-9


def test_c4_isopignistic_contract():
    with criterion("C4 isopignistic contract"):
        rng = random.Random(44)
        for n in (3, 5, 8):
            frame = frame_of(n)
            m = random_bba(rng, frame, rng.randint(2, min(20, (1 << n) - 1)))
            out = bk.least_committed_isopignistic(m)
            masks = [k for k, _ in out.sorted_items()]
            assert all(a & ~b == 0 for a, b in zip(masks, masks[1:]))  # consonant
            assert out.focal_count <= n
            before = bk.betp_vector(m).values
            after = bk.betp_vector(out).values
            assert max(abs(a - b) for a, b in zip(before, after)) <= 1e-12
        # pl-dominance over 100 sampled isopignistics, every subset
        for n in (5, 6):
            frame = frame_of(n)
            m = random_bba(rng, frame, 10)
            lc = bk.least_committed_isopignistic(m)
            pl_lc = {a: bk.pl(lc, a) for a in frame.subsets()}
            for seed in range(100):
                other = bk.sample_isopignistic(m, seed=seed, moves=30)
                for a in frame.subsets():
                    assert pl_lc[a] >= bk.pl(other, a) - 1e-9, (
                        f"pl-dominance violated on subset {frame.names(a)} "
                        f"(sample seed {seed}): pl(least committed) = "
                        f"{pl_lc[a]:.6f} < pl(sampled isopignistic) = "
                        f"{bk.pl(other, a):.6f}"
                    )


def test_c5_mixed_linear_reductions():
    with criterion("C5 mixed linear reduction"):
        rng = random.Random(55)
        solved_pl = solved_bel = negatives = 0
        for _ in range(120):
            n = rng.randint(3, 8)
            frame = frame_of(n)
            m = random_bba(rng, frame, rng.randint(2, min(24, (1 << n) - 1)))
            order = bk.betp_vector(m).order
            full = frame.full_mask
            try:
                reduced, report = bk.reduce_betp_pl(m)
            except NegativeMassSolution as exc:
                negatives += 1
                assert min(exc.solution) < -1e-9  # surfaced, not clamped
            else:
                solved_pl += 1
                assert reduced.focal_count <= 2 * n - 1
                for i in range(n):
                    x = 1 << order[i]
                    assert abs(bk.betp(reduced, x) - bk.betp(m, x)) <= 1e-9
                    if i > 0:
                        assert abs(bk.pl(reduced, x) - bk.pl(m, x)) <= 1e-9
            try:
                reduced, report = bk.reduce_betp_bel(m)
            except NegativeMassSolution as exc:
                negatives += 1
                assert min(exc.solution) < -1e-9
            else:
                solved_bel += 1
                assert reduced.focal_count <= 2 * n - 1
                for i in range(n):
                    x = 1 << order[i]
                    assert abs(bk.betp(reduced, x) - bk.betp(m, x)) <= 1e-9
                    if i < n - 1:
                        coatom = full & ~x
                        assert abs(bk.bel(reduced, coatom) - bk.bel(m, coatom)) <= 1e-9
        assert solved_pl > 0 and solved_bel > 0


def test_c6_rank_analysis():
    with criterion("C6 rank analysis"):
        rng = random.Random(66)
        for n in range(3, 9):
            frame = frame_of(n)
            m = random_bba(rng, frame, min(12, (1 << n) - 1))
            sing = [1 << i for i in range(n)]
            coatoms = [frame.full_mask & ~s for s in sing]
            sys = bk.build_constraint_system(
                m,
                sing + coatoms,
                [("pl", s) for s in sing] + [("bel", c) for c in coatoms],
            )
            assert np.linalg.matrix_rank(sys.matrix) == n + 1


def test_c7_kmeans_contract():
    with criterion("C7 k-means contract"):
        frame = bk.make_frame(["a", "b", "c"])
        worked = bk.make_bba(frame, [(0b001, 0.4), (0b011, 0.35), (0b100, 0.25)])
        reduced, _, _ = bk.kmeans_reduce(worked, bk.KMeansConfig(k=2))
        assert dict(reduced.items()) == pytest.approx({0b001: 0.65, 0b011: 0.35})

        rng = random.Random(77)
        for _ in range(10):
            n = rng.randint(2, 7)
            frame = frame_of(n)
            m = random_bba(
                rng, frame, rng.randint(1, min(14, (1 << n) - 1)), allow_empty=True
            )
            for k in range(1, m.focal_count + 1):
                cfg = bk.KMeansConfig(k=k, restarts=2, seed=k)
                out1, state1, _ = bk.kmeans_reduce(m, cfg)
                out2, state2, _ = bk.kmeans_reduce(m, cfg)
                max_iter = cfg.max_iterations or k
                assert state1.iterations <= max_iter
                assert out1.focal_count <= k
                total = math.fsum(v for _, v in out1.items())
                assert abs(total - 1.0) <= 1e-9
                assert dict(out1.items()) == dict(out2.items())  # determinism
                assert state1 == state2
            full_k = bk.kmeans_reduce(m, bk.KMeansConfig(k=m.focal_count))[0]
            assert dict(full_k.items()) == dict(m.items())  # exact idempotence


def test_c8_scaling():
    with criterion("C8 scaling"):
        rng = random.Random(88)
        frame = frame_of(30)

        def big_bba(size):
            masks = rng.sample(range(1, 1 << 30), size)
            weights = [rng.random() + 0.05 for _ in masks]
            total = sum(weights)
            return bk.make_bba(
                frame, [(k, w / total) for k, w in zip(masks, weights)]
            )

        m1, m2 = big_bba(1000), big_bba(1000)
        t0 = time.perf_counter()
        out = bk.conjunctive(m1, m2)
        elapsed = time.perf_counter() - t0
        assert out.focal_count <= 1_000_000
        assert elapsed < 10.0

        # assignment step grows no worse than k * |m| within 3x slack
        def assignment_time(k, size):
            m = random_bba(rng, frame_of(16), size)
            focals = m.sorted_items()
            centers = sorted(mask for mask, _ in focals[:k])
            best = math.inf
            for _ in range(5):
                t0 = time.perf_counter()
                _assignment_pass(focals, centers)
                best = min(best, time.perf_counter() - t0)
            return best

        base_k, base_size = 8, 256
        base_time = assignment_time(base_k, base_size)
        for k in (8, 16, 32):
            for size in (256, 1024):
                t = assignment_time(k, size)
                work_ratio = (k * size) / (base_k * base_size)
                assert t <= 3.0 * work_ratio * base_time + 1e-4
