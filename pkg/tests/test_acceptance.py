"""Acceptance suite: twelve end-to-end guarantees, one test per criterion.

Each test appends a PASS or FAIL line to the shared list that conftest prints
in its own terminal section, so a full run ends with a visible scoreboard.
Numeric targets are exact; the two timing budgets (1 s per skew size, 60 s for
the seeded search) are wall-clock.
"""

import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

from click.testing import CliRunner

from conftest import (
    acceptance_lines,
    naive_plane_counts,
    naive_span,
    random_affine_map,
    apply_map,
)
from ordlines import (
    PointSet,
    SearchConfig,
    affine3,
    bound_constants,
    boroczky_model,
    collinear,
    coplanar,
    canon_line,
    gen_coplanar_heavy,
    gen_grid2d,
    gen_hesse,
    gen_near_coplanar,
    gen_random,
    gen_two_skew,
    incident,
    kelly_trace,
    minimize_ordinary,
    plane_summary,
    point_degrees,
    project_from,
    read_pointset_file,
    span_summary,
    verify_almost_coplanar,
    verify_skew_bound,
)
from ordlines.cli import main as cli_main


@contextmanager
def criterion(num: int, name: str):
    try:
        yield
    except BaseException:
        acceptance_lines.append(f"[FAIL] criterion {num:2d}: {name}")
        raise
    acceptance_lines.append(f"[PASS] criterion {num:2d}: {name}")


def _pair_identity(t: dict[int, int], n: int) -> bool:
    return sum(comb(k, 2) * c for k, c in t.items()) == comb(n, 2)


def test_criterion_01_skew_ordinary_counts(tmp_path):
    with criterion(1, "skew construction ordinary counts"):
        out = tmp_path / "skew10.txt"
        result = CliRunner().invoke(
            cli_main, ["gen", "skew", "--m", "10", "-o", str(out)]
        )
        assert result.exit_code == 0
        P = read_pointset_file(str(out))
        assert len(P) == 20
        assert span_summary(P).ordinary == 100 == 20**2 // 4

        for m in range(3, 16):
            started = time.perf_counter()
            assert span_summary(gen_two_skew(m)).ordinary == m * m
            assert time.perf_counter() - started < 1.0


def test_criterion_02_bound_constants():
    with criterion(2, "bound constants exact at the reference parameters"):
        beta, gamma = Fraction(2, 3), Fraction(1, 9)
        c = bound_constants(Fraction(2, 27), beta, gamma)
        assert c.alpha0 == Fraction(2, 27)
        assert c.c_alpha0 == Fraction(1, 118098)
        for k in range(1, 100):
            assert bound_constants(Fraction(k, 100), beta, gamma).d_alpha > 0


def test_criterion_03_conic_plus_line_model():
    with criterion(3, "conic-plus-line model has n/2 ordinary lines"):
        for m in range(4, 51, 2):
            s = boroczky_model(m)  # re-validates its rules pairwise on every call
            assert s.ordinary == m == s.n // 2
            assert s.t[2] == m


def test_criterion_04_hesse_against_rational_sets():
    with criterion(4, "ordinary-line-free set exists only beyond the rationals"):
        H = gen_hesse()
        s = span_summary(H)
        assert s.ordinary == 0
        assert s.t == {3: 12}
        assert naive_span(H) == {3: 12}
        assert point_degrees(H) == [4] * 9

        rng = random.Random(2024)
        produced = 0
        while produced < 200:
            n = rng.randint(3, 12)
            P = gen_random(n, 2, seed=rng.randrange(2**32))
            summary = span_summary(P)
            if summary.max_collinear == n:
                continue
            assert summary.ordinary >= 1
            produced += 1


def test_criterion_05_pair_identity_everywhere():
    with criterion(5, "pair identity on every generator and search output"):
        sets = [
            gen_two_skew(3),
            gen_two_skew(8),
            gen_near_coplanar(10, 2, seed=1),
            gen_near_coplanar(12, 3, seed=2),
            gen_coplanar_heavy(10, Fraction(1, 2), seed=3),
            gen_random(8, 2, seed=4),
            gen_random(8, 3, seed=5),
            gen_hesse(),
            gen_grid2d(3, 4),
        ]
        for P in sets:
            s = span_summary(P)
            assert _pair_identity(s.t, len(P))

        for m in (4, 6, 12):
            s = boroczky_model(m)
            assert _pair_identity(s.t, s.n)

        result = minimize_ordinary(
            SearchConfig(n=8, alpha=Fraction(1, 2), iterations=100, seed=6)
        )
        assert _pair_identity(span_summary(result.best).t, 8)
        frozen = minimize_ordinary(
            SearchConfig(
                n=8, alpha=Fraction(3, 4), iterations=0, initial=gen_two_skew(4)
            )
        )
        assert _pair_identity(span_summary(frozen.best).t, 8)


def test_criterion_06_oracle_equivalence():
    with criterion(6, "hashed summaries match the naive classifiers (n <= 10)"):
        catalogue = [
            gen_two_skew(3),
            gen_two_skew(4),
            gen_grid2d(2, 3),
            gen_grid2d(3, 3),
            gen_hesse(),
            gen_near_coplanar(9, 2, seed=1),
            gen_coplanar_heavy(8, Fraction(1, 2), seed=2),
        ]
        rng = random.Random(99)
        randoms = []
        for _ in range(50):
            n = rng.randint(4, 10)
            randoms.append(gen_random(n, rng.choice((2, 3)), seed=rng.randrange(2**32)))
        for P in catalogue + randoms:
            assert span_summary(P).t == naive_span(P)
            if P.kind.value == "affine3":
                assert plane_summary(P).plane_counts == naive_plane_counts(P)


def test_criterion_07_projection_structure():
    with criterion(7, "radial projection partitions and preserves coplanarity"):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(5, 9)
            P = gen_random(n, 3, seed=rng.randrange(2**32))
            center_idx = rng.randrange(n)
            img = project_from(P, center_idx)
            center = P[center_idx]
            assert sum(len(g) for _, g in img.groups) == n - 1

            for _, members in img.groups:
                for i in members[1:]:
                    assert collinear(center, P[members[0]], P[i])

            directions = [q for q, _ in img.groups]
            reps = [P[members[0]] for _, members in img.groups]
            if len(directions) >= 3:
                indices = list(range(len(directions)))
                for _ in range(60):
                    a, b, c = rng.sample(indices, 3)
                    assert collinear(
                        directions[a], directions[b], directions[c]
                    ) == coplanar(center, reps[a], reps[b], reps[c])


def test_criterion_08_kelly_trace():
    with criterion(8, "projection trace finds the guaranteed ordinary lines"):
        axes = PointSet(
            [
                affine3(0, 0, 0),
                affine3(1, 0, 0),
                affine3(2, 0, 0),
                affine3(0, 1, 0),
                affine3(0, 2, 0),
                affine3(0, 0, 1),
                affine3(0, 0, 2),
            ],
            label="three-axes-7",
        )
        report = kelly_trace(axes, 0)
        assert report.l1_size == 3
        assert len(set(report.found_ordinary)) == len(report.found_ordinary)
        assert len(report.found_ordinary) >= 3
        for line in report.found_ordinary:
            assert sum(1 for p in axes if incident(line, p)) == 2
            assert not incident(line, axes[0])

        rng = random.Random(88)
        for _ in range(15):
            n = rng.randint(5, 9)
            P = gen_random(n, 3, seed=rng.randrange(2**32))
            center = rng.randrange(n)
            # raises InvariantViolationError on any internal breakage
            rep = kelly_trace(P, center)
            assert len(rep.found_ordinary) >= rep.l1_size
            for line in rep.found_ordinary:
                assert sum(1 for p in P if incident(line, p)) == 2
                assert not incident(line, P[center])


def test_criterion_09_skew_bound_on_supersets():
    with criterion(9, "skew-lines lower bound on randomized supersets"):
        rng = random.Random(31)
        for trial in range(100):
            m = 3 + trial % 6
            base = gen_two_skew(m)
            line1 = canon_line(base[0], base[1])
            line2 = canon_line(base[m], base[m + 1])
            extra = rng.randint(1, 4)
            points = list(base.points)
            occupied = set(points)
            while len(points) < 2 * m + extra:
                q = affine3(
                    Fraction(rng.randint(-40, 40), rng.randint(1, 9)),
                    Fraction(rng.randint(-40, 40), rng.randint(1, 9)),
                    Fraction(rng.randint(-40, 40), rng.randint(1, 9)),
                )
                if q not in occupied:
                    occupied.add(q)
                    points.append(q)
            report = verify_skew_bound(PointSet(points), line1, line2)
            assert report.holds


def test_criterion_10_near_coplanar_counts():
    with criterion(10, "near-coplanar exact counts and threshold report"):
        for n, k in ((10, 2), (20, 3), (30, 3)):
            P = gen_near_coplanar(n, k, seed=n + k)
            planar = PointSet(P.points[: n - k])
            expected = k * (n - k) + span_summary(planar).ordinary - k
            assert span_summary(P).ordinary == expected

            report = verify_almost_coplanar(P, k)
            assert report.bound == (k + Fraction(1, 2)) * (n - k) - comb(k, 2)
            assert report.count == expected
            # threshold is asymptotic in n; recorded, not asserted
            assert isinstance(report.holds, bool)


def test_criterion_11_search_determinism_and_budget():
    with criterion(11, "annealing search: identity, cap, reproducibility, budget"):
        seed_set = gen_two_skew(10)
        frozen = minimize_ordinary(
            SearchConfig(n=20, alpha=Fraction(3, 5), iterations=0, initial=seed_set)
        )
        assert frozen.best.points == seed_set.points
        assert frozen.best_count == 100

        config = SearchConfig(
            n=20, alpha=Fraction(3, 5), iterations=10_000, seed=424242, initial=seed_set
        )
        started = time.perf_counter()
        result = minimize_ordinary(config)
        elapsed = time.perf_counter() - started
        assert elapsed < 60.0
        assert result.best_count <= 100
        assert span_summary(result.best).ordinary == result.best_count
        assert plane_summary(result.best).max_coplanar <= config.cap == 12

        again = minimize_ordinary(config)
        assert again.best.points == result.best.points
        assert again.trace == result.trace
        assert again.accepted_moves == result.accepted_moves


def test_criterion_12_affine_invariance():
    with criterion(12, "span and plane summaries are affine invariants"):
        catalogue = [
            gen_two_skew(3),
            gen_two_skew(4),
            gen_two_skew(5),
            gen_near_coplanar(9, 2, seed=1),
            gen_near_coplanar(10, 3, seed=2),
            gen_coplanar_heavy(8, Fraction(1, 2), seed=3),
            gen_coplanar_heavy(10, Fraction(3, 5), seed=4),
            gen_random(7, 3, seed=5),
            gen_random(8, 3, seed=6),
            gen_random(6, 3, seed=7),
        ]
        rng = random.Random(4096)
        maps = [random_affine_map(rng) for _ in range(50)]
        for P in catalogue:
            s = span_summary(P)
            p = plane_summary(P)
            plane_sizes = sorted(p.plane_counts.values())
            for mapping in maps:
                Q = apply_map(P, mapping)
                s2 = span_summary(Q)
                assert (s2.t, s2.ordinary, s2.max_collinear) == (
                    s.t,
                    s.ordinary,
                    s.max_collinear,
                )
                p2 = plane_summary(Q)
                assert sorted(p2.plane_counts.values()) == plane_sizes
                assert p2.max_coplanar == p.max_coplanar
