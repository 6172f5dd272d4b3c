"""Simulated annealing over rational 3D point sets, minimizing ordinary lines.

The chase is for configurations with few ordinary lines under a coplanarity
cap: no plane may carry more than floor(alpha * n) points. The engine is
entirely float-free. Acceptance probabilities come from a fixed rational
piecewise-linear table of exp(-x), the temperature is a rational with a
bounded denominator, and random draws are integers, so a seed fully
determines the run on every platform.

Proposals are scored with a full ordinary-line recount (pairs grouped by
canonical line key; a line is ordinary exactly when one pair maps to its key).
The coplanarity cap is only checked once a proposal would otherwise be
accepted, and only through the moved point: a move can create an overweight
plane only through the point it placed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .analysis import plane_ordinary_profile
from .errors import GenerationError, InvariantViolationError, UsageError
from .geometry import Kind, Point, affine3, cross_key, direction_key, int_hom, plucker_key
from .incidence import PointSet, plane_summary, span_summary

__all__ = ["SearchConfig", "SearchResult", "minimize_ordinary"]

DEFAULT_MOVE_WEIGHTS = {
    "perturb": 5,
    "snap_to_line": 2,
    "snap_to_plane": 2,
    "restart_point": 1,
}

# exp(-k/2) for k = 0..16, rounded to 6 decimals; zero beyond x = 8.
_EXP_NODES = (
    Fraction(1),
    Fraction(606531, 1000000),
    Fraction(367879, 1000000),
    Fraction(223130, 1000000),
    Fraction(135335, 1000000),
    Fraction(82085, 1000000),
    Fraction(49787, 1000000),
    Fraction(30197, 1000000),
    Fraction(18316, 1000000),
    Fraction(11109, 1000000),
    Fraction(6738, 1000000),
    Fraction(4087, 1000000),
    Fraction(2479, 1000000),
    Fraction(1503, 1000000),
    Fraction(912, 1000000),
    Fraction(553, 1000000),
    Fraction(335, 1000000),
)

_TEMP_DEN_LIMIT = 1 << 20
_DRAW_DEN = 1 << 32


def _exp_neg(x: Fraction) -> Fraction:
    """Piecewise-linear rational surrogate for exp(-x), monotone on [0, 8]."""
    if x <= 0:
        return Fraction(1)
    if x >= 8:
        return Fraction(0)
    k = floor(2 * x)
    frac = 2 * x - k
    lo, hi = _EXP_NODES[k], _EXP_NODES[k + 1]
    return lo + frac * (hi - lo)


@dataclass(frozen=True)
class SearchConfig:
    n: int
    alpha: Fraction
    iterations: int
    seed: int = 0
    coordinate_bound: int = 30
    initial: PointSet | None = None
    move_weights: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_MOVE_WEIGHTS))
    temp_initial: Fraction = Fraction(2)
    temp_decay: Fraction = Fraction(999, 1000)

    def __post_init__(self):
        if self.n < 4:
            raise UsageError("search needs n >= 4")
        alpha = Fraction(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if floor(alpha * self.n) < 3:
            raise UsageError(f"cap floor(alpha*n) = {floor(alpha * self.n)} below 3 is infeasible")
        if self.iterations < 0:
            raise UsageError("iterations must be nonnegative")
        if self.coordinate_bound < 1:
            raise UsageError("coordinate_bound must be positive")
        if set(self.move_weights) - set(DEFAULT_MOVE_WEIGHTS):
            raise UsageError(f"unknown move names: {set(self.move_weights) - set(DEFAULT_MOVE_WEIGHTS)}")
        weights = {name: self.move_weights.get(name, 0) for name in DEFAULT_MOVE_WEIGHTS}
        if any(w < 0 for w in weights.values()) or not any(weights.values()):
            raise UsageError("move weights must be nonnegative and not all zero")
        object.__setattr__(self, "move_weights", weights)
        object.__setattr__(self, "temp_initial", Fraction(self.temp_initial))
        object.__setattr__(self, "temp_decay", Fraction(self.temp_decay))
        if self.temp_initial <= 0 or not 0 < self.temp_decay < 1:
            raise UsageError("temperature schedule needs temp_initial > 0 and 0 < temp_decay < 1")

    @property
    def cap(self) -> int:
        return floor(self.alpha * self.n)


@dataclass
class SearchResult:
    """Outcome of one annealing run.

    ``trace`` records (iteration, count) whenever the best count improves,
    starting from the initial state at iteration 0. ``plane_profile`` pairs
    each heavy plane's point count with the ordinary count of that coplanar
    subset on its own.
    """

    best: PointSet
    best_count: int
    ratio: Fraction
    accepted_moves: int
    trace: list[tuple[int, int]]
    plane_profile: list[tuple[int, int]]


def _rand_q(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _ordinary_count(homs: list[tuple[int, ...]]) -> tuple[int, int]:
    """(ordinary lines, distinct lines) of the set, from integer homogeneous coords.

    A spanned line with k points receives C(k,2) pairs, so a line is ordinary
    exactly when its key is hit by a single pair.
    """
    pair_totals: dict[tuple[int, ...], int] = {}
    n = len(homs)
    for i in range(n - 1):
        hi = homs[i]
        for j in range(i + 1, n):
            key = plucker_key(hi, homs[j])
            pair_totals[key] = pair_totals.get(key, 0) + 1
    ordinary = sum(1 for c in pair_totals.values() if c == 1)
    return ordinary, len(pair_totals)


def _breaks_cap(homs: list[tuple[int, ...]], moved: int, cap: int) -> bool:
    """Exact test for an overweight plane through the moved point.

    Points coplanar with the moved point project to collinear directions, so
    the heaviest plane through it is 1 + the heaviest weighted collinear
    bundle of direction classes (or 1 + the heaviest single class when the
    plane hugs one line).
    """
    hm = homs[moved]
    weights: dict[tuple[int, ...], int] = {}
    for j, hj in enumerate(homs):
        if j == moved:
            continue
        d = direction_key(hm, hj)
        weights[d] = weights.get(d, 0) + 1
    heaviest = max(weights.values())
    dirs = list(weights.items())
    if len(dirs) >= 2:
        bundles: dict[tuple[int, ...], set[int]] = {}
        for a in range(len(dirs) - 1):
            da = dirs[a][0]
            for b in range(a + 1, len(dirs)):
                bundles.setdefault(cross_key(da, dirs[b][0]), set()).update((a, b))
        for members in bundles.values():
            heaviest = max(heaviest, sum(dirs[idx][1] for idx in members))
    return 1 + heaviest > cap


def _random_start(config: SearchConfig, rng: random.Random) -> list[Point]:
    for _ in range(100):
        coords: set[tuple[Fraction, Fraction, Fraction]] = set()
        while len(coords) < config.n:
            coords.add(tuple(_rand_q(rng, config.coordinate_bound) for _ in range(3)))
        pts = [affine3(*c) for c in sorted(coords)]
        homs = [int_hom(p) for p in pts]
        if _ordinary_count(homs)[1] == 1:
            continue
        if plane_summary(PointSet(pts)).max_coplanar <= config.cap:
            return pts
    raise GenerationError("no random start satisfied the coplanarity cap after 100 tries")


def _propose(points: list[Point], rng: random.Random, move: str, bound: int) -> tuple[int, Point]:
    n = len(points)
    i = rng.randrange(n)
    if move == "perturb":
        axis = rng.randrange(3)
        cs = list(points[i].coords)
        cs[axis] = _rand_q(rng, bound)
        return i, affine3(*cs)
    if move == "restart_point":
        return i, affine3(_rand_q(rng, bound), _rand_q(rng, bound), _rand_q(rng, bound))
    others = list(range(n))
    others.remove(i)
    if move == "snap_to_line":
        j, k = rng.sample(others, 2)
        t = _rand_q(rng, bound)
        pj, pk = points[j].coords, points[k].coords
        return i, affine3(*(a + t * (b - a) for a, b in zip(pj, pk)))
    j, k, m = rng.sample(others, 3)
    pj, pk, pm = points[j].coords, points[k].coords, points[m].coords
    u = tuple(b - a for a, b in zip(pj, pk))
    v = tuple(b - a for a, b in zip(pj, pm))
    s, t = _rand_q(rng, bound), _rand_q(rng, bound)
    return i, affine3(*(a + s * du + t * dv for a, du, dv in zip(pj, u, v)))


def minimize_ordinary(config: SearchConfig) -> SearchResult:
    """Anneal toward a rational 3D set with few ordinary lines under the cap.

    Deterministic given the config (seed included). The returned best set is
    re-verified from scratch: an independent recount must reproduce
    ``best_count`` and the heaviest plane must respect the cap.
    """
    if not isinstance(config.seed, int) or not 0 <= config.seed < 2**64:
        raise UsageError("seed must be an unsigned 64-bit integer")
    rng = random.Random(config.seed)

    if config.initial is not None:
        if config.initial.kind is not Kind.AFFINE3 or config.initial.field_name != "Q":
            raise UsageError("initial set must be rational and 3D")
        if len(config.initial) != config.n:
            raise UsageError(
                f"initial set has {len(config.initial)} points, config says n={config.n}"
            )
        if plane_summary(config.initial).max_coplanar > config.cap:
            raise UsageError("initial set violates the coplanarity cap")
        points = list(config.initial.points)
    else:
        points = _random_start(config, rng)

    homs = [int_hom(p) for p in points]
    occupied = set(points)
    current, _ = _ordinary_count(homs)

    best_points = list(points)
    best_count = current
    trace = [(0, current)]
    accepted = 0

    move_names = list(DEFAULT_MOVE_WEIGHTS)
    cumulative = []
    total = 0
    for name in move_names:
        total += config.move_weights[name]
        cumulative.append(total)

    temp = config.temp_initial
    for it in range(1, config.iterations + 1):
        r = rng.randrange(total)
        move = next(name for name, c in zip(move_names, cumulative) if r < c)
        i, new_point = _propose(points, rng, move, config.coordinate_bound)
        temp = (temp * config.temp_decay).limit_denominator(_TEMP_DEN_LIMIT)
        if temp <= 0:
            temp = Fraction(1, _TEMP_DEN_LIMIT)
        if new_point in occupied:
            continue
        old_point, old_hom = points[i], homs[i]
        points[i], homs[i] = new_point, int_hom(new_point)
        candidate, num_lines = _ordinary_count(homs)
        ok = num_lines > 1
        if ok and candidate >= current:
            p = _exp_neg(Fraction(candidate - current) / temp)
            ok = Fraction(rng.randrange(_DRAW_DEN), _DRAW_DEN) < p
        if ok:
            ok = not _breaks_cap(homs, i, config.cap)
        if not ok:
            points[i], homs[i] = old_point, old_hom
            continue
        occupied.discard(old_point)
        occupied.add(new_point)
        current = candidate
        accepted += 1
        if current < best_count:
            best_count = current
            best_points = list(points)
            trace.append((it, current))

    best = PointSet(best_points, label=f"search-n{config.n}-seed{config.seed}")
    recount = span_summary(best).ordinary
    if recount != best_count:
        raise InvariantViolationError(f"recount {recount} disagrees with best_count {best_count}")
    if plane_summary(best).max_coplanar > config.cap:
        raise InvariantViolationError("best set violates the coplanarity cap")
    return SearchResult(
        best=best,
        best_count=best_count,
        ratio=Fraction(best_count, config.n**2),
        accepted_moves=accepted,
        trace=trace,
        plane_profile=plane_ordinary_profile(best),
    )
