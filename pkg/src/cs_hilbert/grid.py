"""Grid-poset combinatorics.

The ambient poset is the grid [1, m] x [1, n] ordered componentwise.  An
antichain of pairwise incomparable points, stored with strictly increasing
first coordinates (equivalently, strictly decreasing second coordinates),
determines an order ideal, a cutting threshold, and a decomposition of the
grid into two complementary sub-grids.  These are the combinatorial seeds
for everything else in the package.

Index conventions: grid coordinates are 1-based.  An antichain with points
(a_1, b_1), ..., (a_s, b_s) exposes the sentinel values a_0 = 0, a_{s+1} = m,
b_0 = n, b_{s+1} = 0 through accessor methods; the sentinels are never stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, PreconditionError, UnsupportedCutError

Point = tuple[int, int]


@dataclass(frozen=True)
class GridShape:
    """Dimensions of the grid poset: m points on the x side, n on the y side."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DomainError(f"grid shape requires m, n >= 1, got ({self.m}, {self.n})")

    def contains(self, point: Point) -> bool:
        a, b = point
        return 1 <= a <= self.m and 1 <= b <= self.n

    def cells(self) -> Iterator[Point]:
        for a in range(1, self.m + 1):
            for b in range(1, self.n + 1):
                yield (a, b)


def _shape_allow_empty(m: int, n: int) -> GridShape:
    # Cut sub-grids may lose all variables on one side; such degenerate shapes
    # are built here, bypassing the public constructor, and are only consumed
    # by the dimension recursion.
    if m < 0 or n < 0:
        raise DomainError(f"grid sides must be >= 0, got ({m}, {n})")
    shape = object.__new__(GridShape)
    object.__setattr__(shape, "m", m)
    object.__setattr__(shape, "n", n)
    return shape


@dataclass(frozen=True)
class Antichain:
    """Pairwise incomparable grid points, sorted by first coordinate.

    The strict monotonicity of the two coordinate sequences is exactly
    pairwise incomparability, so it is enforced at construction time.
    """

    points: tuple[Point, ...]
    shape: GridShape

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((int(a), int(b)) for a, b in self.points))
        for point in self.points:
            if not self.shape.contains(point):
                raise DomainError(
                    f"point {point} outside grid {self.shape.m}x{self.shape.n}"
                )
        for (a1, b1), (a2, b2) in zip(self.points, self.points[1:]):
            if not (a1 < a2 and b1 > b2):
                raise DomainError(
                    f"points {(a1, b1)} and {(a2, b2)} are not in antichain position"
                )

    @property
    def s(self) -> int:
        return len(self.points)

    def is_empty(self) -> bool:
        return not self.points

    def a(self, idx: int) -> int:
        """First coordinate of the idx-th point (1-based); a(0) = 0, a(s+1) = m."""
        if idx == 0:
            return 0
        if idx == self.s + 1:
            return self.shape.m
        if not 1 <= idx <= self.s:
            raise IndexError(f"antichain index {idx} out of range 0..{self.s + 1}")
        return self.points[idx - 1][0]

    def b(self, idx: int) -> int:
        """Second coordinate of the idx-th point (1-based); b(0) = n, b(s+1) = 0."""
        if idx == 0:
            return self.shape.n
        if idx == self.s + 1:
            return 0
        if not 1 <= idx <= self.s:
            raise IndexError(f"antichain index {idx} out of range 0..{self.s + 1}")
        return self.points[idx - 1][1]

    def to_json(self) -> dict:
        return {
            "m": self.shape.m,
            "n": self.shape.n,
            "antichain": [list(p) for p in self.points],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Antichain":
        try:
            m, n = int(doc["m"]), int(doc["n"])
            raw = [(int(a), int(b)) for a, b in doc["antichain"]]
        except (KeyError, TypeError, ValueError) as err:
            raise DomainError(f"malformed antichain document: {err}") from err
        return cls(tuple(raw), GridShape(m, n))


@dataclass(frozen=True)
class OrderIdeal:
    """A downward closed subset of the grid."""

    members: frozenset[Point]
    shape: GridShape

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for a, b in self.members:
            if not self.shape.contains((a, b)):
                raise DomainError(f"point {(a, b)} outside grid {self.shape.m}x{self.shape.n}")
            if a > 1 and (a - 1, b) not in self.members:
                raise DomainError(f"set is not downward closed at {(a, b)}")
            if b > 1 and (a, b - 1) not in self.members:
                raise DomainError(f"set is not downward closed at {(a, b)}")

    def __contains__(self, point: Point) -> bool:
        return point in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_points(self) -> list[Point]:
        return sorted(self.members)

    def column_heights(self) -> tuple[int, ...]:
        """For each a = 1..m, the largest b with (a, b) in the ideal (0 if none)."""
        heights = [0] * self.shape.m
        for a, b in self.members:
            if b > heights[a - 1]:
                heights[a - 1] = b
        return tuple(heights)

    def maximal_elements(self) -> Antichain:
        return normalize_antichain(self.members, self.shape)


@dataclass(frozen=True)
class CutResult:
    """Decomposition of an antichain along its cutting threshold.

    The grid splits into the sub-grid left of and above the cut point and the
    sub-grid right of and below it; the cut point itself belongs to neither.
    Sub-grids are re-indexed to 1-based coordinates, and the offsets record
    the injections back into the original grid.
    """

    q: int
    left_shape: GridShape
    left_antichain: Antichain
    right_shape: GridShape
    right_antichain: Antichain
    left_offset: Point
    right_offset: Point

    def left_to_original(self, point: Point) -> Point:
        return (point[0] + self.left_offset[0], point[1] + self.left_offset[1])

    def right_to_original(self, point: Point) -> Point:
        return (point[0] + self.right_offset[0], point[1] + self.right_offset[1])

    def left_points_original(self) -> tuple[Point, ...]:
        return tuple(self.left_to_original(p) for p in self.left_antichain.points)

    def right_points_original(self) -> tuple[Point, ...]:
        return tuple(self.right_to_original(p) for p in self.right_antichain.points)

    def left_ranges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Original-coordinate ranges ((x_lo, x_hi), (y_lo, y_hi)) of the left sub-grid."""
        dx, dy = self.left_offset
        return ((dx + 1, dx + self.left_shape.m), (dy + 1, dy + self.left_shape.n))

    def right_ranges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        dx, dy = self.right_offset
        return ((dx + 1, dx + self.right_shape.m), (dy + 1, dy + self.right_shape.n))


def normalize_antichain(points, shape: GridShape) -> Antichain:
    """Canonical antichain spanning the same order ideal as the given points.

    Duplicates and dominated points are dropped; the survivors are the maximal
    elements, returned sorted by first coordinate.
    """
    distinct = set()
    for p in points:
        point = (int(p[0]), int(p[1]))
        if not shape.contains(point):
            raise DomainError(f"point {point} outside grid {shape.m}x{shape.n}")
        distinct.add(point)
    maximal = [
        p
        for p in distinct
        if not any(q != p and p[0] <= q[0] and p[1] <= q[1] for q in distinct)
    ]
    return Antichain(tuple(sorted(maximal)), shape)


def order_ideal(antichain: Antichain) -> OrderIdeal:
    """All grid points lying below some point of the antichain."""
    members = {
        (a, b)
        for (pa, pb) in antichain.points
        for a in range(1, pa + 1)
        for b in range(1, pb + 1)
    }
    return OrderIdeal(frozenset(members), antichain.shape)


def cutting_threshold(antichain: Antichain) -> int:
    """Smallest q such that every point past index q sits in the maximal
    staircase hugging the lower-right corner of the grid.

    Concretely, q is minimal with 0 <= q <= s so that for all i in q+1..s the
    first coordinates are consecutive (a_i = a_{i-1} + 1), the second
    coordinates are consecutive down to 1 (b_i = b_{i+1} + 1, with b_{s+1} = 0),
    and a_i < m, b_i < n.  The conditions hold vacuously at q = s, so the
    minimum always exists.
    """
    if antichain.s == 0:
        raise PreconditionError("cutting threshold requires a nonempty antichain")
    m, n = antichain.shape.m, antichain.shape.n
    q = 0
    for i in range(1, antichain.s + 1):
        ok = (
            antichain.a(i) < m
            and antichain.b(i) < n
            and antichain.a(i) == antichain.a(i - 1) + 1
            and antichain.b(i) == antichain.b(i + 1) + 1
        )
        if not ok:
            q = i
    return q


def cut(antichain: Antichain) -> CutResult:
    """Split the antichain at its cutting threshold q >= 1.

    The left sub-grid is {1..a_q} x {b_q+1..n} and receives the first q-1
    points; the right sub-grid is {a_q+1..m} x {1..b_q} and receives the
    points past index q.  Both are re-indexed to 1-based coordinates, and one
    side of a sub-grid may be empty (the degenerate shapes are legal only for
    the dimension recursion).
    """
    q = cutting_threshold(antichain)
    if q == 0:
        raise UnsupportedCutError(
            "cut undefined at threshold 0; callers must branch to the base cases"
        )
    m, n = antichain.shape.m, antichain.shape.n
    aq, bq = antichain.a(q), antichain.b(q)
    left_shape = _shape_allow_empty(aq, n - bq)
    right_shape = _shape_allow_empty(m - aq, bq)
    left_points = tuple((a, b - bq) for a, b in antichain.points[: q - 1])
    right_points = tuple((a - aq, b) for a, b in antichain.points[q:])
    return CutResult(
        q=q,
        left_shape=left_shape,
        left_antichain=Antichain(left_points, left_shape),
        right_shape=right_shape,
        right_antichain=Antichain(right_points, right_shape),
        left_offset=(0, bq),
        right_offset=(aq, 0),
    )


def enumerate_antichains(shape: GridShape) -> Iterator[Antichain]:
    """Yield every antichain of the grid exactly once, the empty one included.

    Antichains correspond to weakly decreasing column-height profiles, that
    is, to monotone lattice paths, so the stream has binomial(m+n, m) entries
    instead of the 2^(m*n) subsets a naive filter would visit.
    """
    m, n = shape.m, shape.n
    for heights in itertools.combinations_with_replacement(range(n, -1, -1), m):
        points = []
        for a in range(1, m + 1):
            nxt = heights[a] if a < m else 0
            if heights[a - 1] > nxt:
                points.append((a, heights[a - 1]))
        yield Antichain(tuple(points), shape)
