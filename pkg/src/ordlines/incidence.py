"""Spanned lines and planes of a finite point set, and radial projections.

The central trick is shared by everything here: group the C(n,2) point pairs
by the canonical key of the line they span. Each group then holds exactly the
indices of the set's points on that line, so histograms, degrees, and
ordinary-line lists all fall out of one dictionary pass. Planes are derived
from (spanned line, off-line point) pairs instead of raw triples; the union of
contributions per canonical plane recovers the full point set of each plane.

Projections from a set point are kept projective: the image of q under
projection from p is the direction of the line pq, as a point of the rational
projective plane. No image plane is ever chosen, which makes the projection
exact and canonical while preserving exactly the collinearity structure a
generic image plane would show.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import DegenerateInputError, InvariantViolationError, UsageError
from .geometry import (
    CanonLine2,
    CanonLine3,
    CanonPlane,
    Kind,
    Point,
    canon_line,
    collinear,
    cross_key,
    direction_key,
    incident,
    int_hom,
    plane_key,
    plucker_key,
    projective2,
)

__all__ = [
    "PointSet",
    "SpanSummary",
    "PlaneSummary",
    "ProjectionImage",
    "KellyTraceReport",
    "span_summary",
    "ordinary_lines",
    "plane_summary",
    "max_collinear",
    "point_degrees",
    "project_from",
    "image_point_set",
    "kelly_trace",
]


@dataclass(frozen=True)
class PointSet:
    """A nonempty tuple of pairwise distinct points, all of one kind and field."""

    points: tuple[Point, ...]
    label: str = ""

    def __init__(self, points, label: str = ""):
        pts = tuple(points)
        if not pts:
            raise UsageError("point set must be nonempty")
        k0, f0 = pts[0].kind, pts[0].field_name
        for p in pts[1:]:
            if p.kind is not k0:
                raise UsageError(f"mixed point kinds {k0.value} / {p.kind.value}")
            if p.field_name != f0:
                raise UsageError(f"mixed coordinate fields {f0} / {p.field_name}")
        if len(set(pts)) != len(pts):
            raise UsageError("point set has duplicate points")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "label", label)

    @property
    def kind(self) -> Kind:
        return self.points[0].kind

    @property
    def field_name(self) -> str:
        return self.points[0].field_name

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]


@dataclass
class SpanSummary:
    """Histogram of spanned lines by the number of set points they contain.

    ``t[k]`` counts lines with exactly k points; ``ordinary`` is ``t[2]``.
    """

    t: dict[int, int]
    num_lines: int
    ordinary: int
    max_collinear: int
    n: int


@dataclass
class PlaneSummary:
    plane_counts: dict[CanonPlane, int]
    max_coplanar: int


@dataclass
class ProjectionImage:
    """Result of projecting a 3D set from one of its points.

    Each group pairs a direction (a rational projective-plane point) with the
    sorted indices of the source points lying on the line through the center in
    that direction.
    """

    center: int
    groups: list[tuple[Point, tuple[int, ...]]]
    source: PointSet

    def __post_init__(self):
        seen: set[int] = set()
        for _, idxs in self.groups:
            if seen & set(idxs):
                raise InvariantViolationError("projection groups overlap")
            seen |= set(idxs)
        expected = set(range(len(self.source))) - {self.center}
        if seen != expected:
            raise InvariantViolationError("projection groups do not cover the source set")


@dataclass
class KellyTraceReport:
    """Accounting of the projection-based ordinary-line hunt from one center.

    ``l1_size`` counts image lines with at least two image points and no
    unique-preimage points; ``found_ordinary`` lists ordinary lines of the
    source set that avoid the center, at least one per such image line.
    """

    q1_size: int
    q2_size: int
    l1_size: int
    found_ordinary: list[CanonLine3]


def _line_groups(P: PointSet) -> dict:
    """Map each spanned line's canonical key to the set of incident point indices."""
    pts = P.points
    n = len(pts)
    groups: dict = {}
    if P.field_name == "Q":
        homs = [int_hom(p) for p in pts]
        key = plucker_key if P.kind is Kind.AFFINE3 else cross_key
        for i in range(n - 1):
            hi = homs[i]
            for j in range(i + 1, n):
                g = groups.setdefault(key(hi, homs[j]), set())
                g.add(i)
                g.add(j)
    else:
        for i in range(n - 1):
            for j in range(i + 1, n):
                g = groups.setdefault(canon_line(pts[i], pts[j]), set())
                g.add(i)
                g.add(j)
    return groups


def span_summary(P: PointSet) -> SpanSummary:
    """Classify every spanned line of P by how many points of P it contains."""
    if len(P) < 2:
        raise UsageError("span_summary needs at least 2 points")
    groups = _line_groups(P)
    t = Counter(len(g) for g in groups.values())
    n = len(P)
    if sum(comb(k, 2) * c for k, c in t.items()) != comb(n, 2):
        raise InvariantViolationError("line histogram does not account for every point pair")
    return SpanSummary(
        t=dict(sorted(t.items())),
        num_lines=len(groups),
        ordinary=t.get(2, 0),
        max_collinear=max(t),
        n=n,
    )


def ordinary_lines(P: PointSet) -> list[CanonLine2 | CanonLine3]:
    """The spanned lines containing exactly two points of P, canonically sorted."""
    if len(P) < 2:
        raise UsageError("ordinary_lines needs at least 2 points")
    out = []
    for g in _line_groups(P).values():
        if len(g) == 2:
            i, j = sorted(g)
            out.append(canon_line(P[i], P[j]))
    out.sort(key=lambda line: line.sort_key())
    return out


def max_collinear(P: PointSet) -> int:
    return span_summary(P).max_collinear


def point_degrees(P: PointSet) -> list[int]:
    """Number of spanned lines through each point, indexed like P."""
    if len(P) < 2:
        raise UsageError("point_degrees needs at least 2 points")
    degrees = [0] * len(P)
    for g in _line_groups(P).values():
        for i in g:
            degrees[i] += 1
    return degrees


def plane_summary(P: PointSet) -> PlaneSummary:
    """Classify every spanned plane of a 3D set by how many points of P it contains.

    Planes are enumerated as (spanned line, off-line point) pairs. Every point
    of a spanned plane either lies on one of its spanned lines or is the
    off-line point of one, so accumulating the union per canonical plane
    recovers exact per-plane counts without touching all C(n,3) triples twice.
    """
    if P.kind is not Kind.AFFINE3:
        raise UsageError("plane_summary needs a 3D affine set")
    if len(P) < 3:
        raise UsageError("plane_summary needs at least 3 points")
    groups = _line_groups(P)
    n = len(P)
    if any(len(g) == n for g in groups.values()):
        raise DegenerateInputError("all points are collinear; spanned planes are undefined")
    homs = [int_hom(p) for p in P.points]
    planes: dict[tuple[int, ...], set[int]] = {}
    for g in groups.values():
        it = iter(g)
        i0, i1 = next(it), next(it)
        for x in range(n):
            if x in g:
                continue
            s = planes.setdefault(plane_key(homs[i0], homs[i1], homs[x]), set())
            s |= g
            s.add(x)
    counts = {CanonPlane(k): len(s) for k, s in sorted(planes.items())}
    return PlaneSummary(plane_counts=counts, max_coplanar=max(counts.values()))


def project_from(P: PointSet, center_index: int) -> ProjectionImage:
    """Project a 3D set from one of its points, grouping the rest by direction."""
    if P.kind is not Kind.AFFINE3:
        raise UsageError("project_from needs a 3D affine set")
    if len(P) < 2:
        raise UsageError("project_from needs at least 2 points")
    if not 0 <= center_index < len(P):
        raise UsageError(f"center index {center_index} out of range for {len(P)} points")
    homs = [int_hom(p) for p in P.points]
    hc = homs[center_index]
    by_dir: dict[tuple[int, ...], list[int]] = {}
    for i in range(len(P)):
        if i == center_index:
            continue
        by_dir.setdefault(direction_key(hc, homs[i]), []).append(i)
    groups = [(projective2(*d), tuple(sorted(idxs))) for d, idxs in by_dir.items()]
    groups.sort(key=lambda g: g[0].sort_key())
    return ProjectionImage(center=center_index, groups=groups, source=P)


def image_point_set(img: ProjectionImage) -> tuple[PointSet, tuple[bool, ...]]:
    """The projected set as projective points, with a unique-preimage flag per point."""
    pts = tuple(p for p, _ in img.groups)
    flags = tuple(len(idxs) == 1 for _, idxs in img.groups)
    label = f"{img.source.label or 'set'}/projected-from-{img.center}"
    return PointSet(pts, label=label), flags


def kelly_trace(P: PointSet, center_index: int) -> KellyTraceReport:
    """Hunt for ordinary lines of P avoiding one point, via the projection from it.

    Projects P from the chosen center, finds the image lines that have at least
    two image points but no unique-preimage point, and exhaustively searches the
    plane over each such image line for ordinary lines of P that avoid the
    center. Over the rationals that search is guaranteed to succeed for every
    such plane; an empty-handed search is reported as an invariant violation
    rather than papered over.
    """
    if P.field_name != "Q":
        raise UsageError("kelly_trace needs a rational point set")
    img = project_from(P, center_index)
    q1, flags = image_point_set(img)
    q2_size = sum(flags)
    report = KellyTraceReport(
        q1_size=len(q1), q2_size=q2_size, l1_size=0, found_ordinary=[]
    )
    if len(q1) < 2:
        return report

    center = P[center_index]
    found: set[CanonLine3] = set()
    for g in _line_groups(q1).values():
        if any(flags[k] for k in g):
            continue
        report.l1_size += 1
        # The plane through the center and this image line meets P exactly in
        # the center plus the preimages, so incidence tests can stay local.
        members: list[int] = []
        for k in g:
            members.extend(img.groups[k][1])
        members.sort()
        found_here = 0
        for a in range(len(members) - 1):
            i = members[a]
            for b in range(a + 1, len(members)):
                j = members[b]
                if collinear(center, P[i], P[j]):
                    continue
                if any(
                    collinear(P[i], P[j], P[k]) for k in members if k != i and k != j
                ):
                    continue
                found.add(canon_line(P[i], P[j]))
                found_here += 1
        if found_here == 0:
            raise InvariantViolationError(
                "no ordinary line avoiding the center in a plane where one is guaranteed"
            )

    for line in found:
        on_line = sum(1 for p in P if incident(line, p))
        if on_line != 2 or incident(line, center):
            raise InvariantViolationError("recorded line is not ordinary or hits the center")
    report.found_ordinary = sorted(found, key=lambda line: line.sort_key())
    if len(report.found_ordinary) < report.l1_size:
        raise InvariantViolationError("fewer ordinary lines than hunted planes")
    return report
