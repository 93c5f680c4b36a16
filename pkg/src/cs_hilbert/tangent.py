"""Closed-form enumeration of the tangent weight decomposition.

The tangent space at the ideal of an antichain is graded by the torus
weights in Z^m + Z^n (weight e_i for x_i, f_j for y_j).  Every nonzero
weight space is one-dimensional and its weight has one of three shapes:
e_j - e_i, f_h - f_k, or e_j - e_i + f_h - f_k.  This module lists the
occurring weights directly from the antichain data; the exact linear
algebra route in :mod:`cs_hilbert.oracle` recomputes the same decomposition
independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .grid import Antichain


def _signed_pair(src: int, dst: int) -> tuple[tuple[int, int], ...]:
    if src == dst:
        return ()
    return tuple(sorted(((src, -1), (dst, 1))))


@dataclass(frozen=True)
class FineWeight:
    """A torus weight, stored sparsely as sorted (index, coefficient) pairs.

    Exactly the three shapes occurring among tangent weights are allowed:
    a single x difference, a single y difference, or one of each.
    """

    x_part: tuple[tuple[int, int], ...]
    y_part: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "x_part", tuple(tuple(e) for e in self.x_part))
        object.__setattr__(self, "y_part", tuple(tuple(e) for e in self.y_part))
        for part in (self.x_part, self.y_part):
            if part == ():
                continue
            if (
                len(part) != 2
                or sorted(c for _, c in part) != [-1, 1]
                or part[0][0] >= part[1][0]
            ):
                raise InvariantViolation(f"malformed weight part {part}")
        if not self.x_part and not self.y_part:
            raise InvariantViolation("the zero weight cannot occur")

    @classmethod
    def of_transition(cls, i: int, j: int, k: int, h: int) -> "FineWeight":
        """Weight of a map sending the generator x_i * y_k to x_j * y_h."""
        return cls(_signed_pair(i, j), _signed_pair(k, h))

    @classmethod
    def x_move(cls, i: int, j: int) -> "FineWeight":
        return cls(_signed_pair(i, j), ())

    @classmethod
    def y_move(cls, k: int, h: int) -> "FineWeight":
        return cls((), _signed_pair(k, h))

    def sort_key(self):
        return (self.x_part, self.y_part)

    def to_json(self) -> dict:
        return {"x": [list(e) for e in self.x_part], "y": [list(e) for e in self.y_part]}


@dataclass(frozen=True)
class TangentReport:
    """Weight-by-weight census of the tangent space at an antichain ideal.

    ``linear_x`` holds pairs (i, j) contributing weight e_j - e_i, ``linear_y``
    pairs (k, h) contributing f_h - f_k, and ``quadratic`` triples (l, j, h)
    contributing e_j - e_{a_l} + f_h - f_{b_l}.
    """

    linear_x: tuple[tuple[int, int], ...]
    linear_y: tuple[tuple[int, int], ...]
    quadratic: tuple[tuple[int, int, int], ...]
    total: int

    def __post_init__(self):
        expected = len(self.linear_x) + len(self.linear_y) + len(self.quadratic)
        if self.total != expected:
            raise InvariantViolation(
                f"total {self.total} does not match the {expected} listed weights"
            )

    def to_json(self) -> dict:
        return {
            "linear_x": [list(p) for p in self.linear_x],
            "linear_y": [list(p) for p in self.linear_y],
            "quadratic": [list(t) for t in self.quadratic],
            "total": self.total,
        }


def linear_tangent_weights(
    antichain: Antichain,
) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Pairs indexing the one-dimensional linear weight spaces.

    A pair i < j contributes weight e_j - e_i exactly when some antichain
    point satisfies i <= a_l < j; the y side is symmetric via the b_l.
    """
    m, n = antichain.shape.m, antichain.shape.n
    s = antichain.s
    a_vals = [antichain.a(l) for l in range(1, s + 1)]
    b_vals = [antichain.b(l) for l in range(1, s + 1)]
    xs = tuple(
        (i, j)
        for i in range(1, m + 1)
        for j in range(i + 1, m + 1)
        if any(i <= a < j for a in a_vals)
    )
    ys = tuple(
        (k, h)
        for k in range(1, n + 1)
        for h in range(k + 1, n + 1)
        if any(k <= b < h for b in b_vals)
    )
    return xs, ys


def quadratic_tangent_weights(antichain: Antichain) -> tuple[tuple[int, int, int], ...]:
    """Triples (l, j, h) indexing the one-dimensional quadratic weight spaces.

    An antichain index l qualifies when its neighbors are tight on both sides
    (a_{l-1} = a_l - 1 and b_{l+1} = b_l - 1, sentinels included); the targets
    then range over a_l + 1 <= j <= a_{l+1} and b_l + 1 <= h <= b_{l-1}.
    """
    out = []
    for l in range(1, antichain.s + 1):
        if antichain.a(l - 1) != antichain.a(l) - 1:
            continue
        if antichain.b(l + 1) != antichain.b(l) - 1:
            continue
        for j in range(antichain.a(l) + 1, antichain.a(l + 1) + 1):
            for h in range(antichain.b(l) + 1, antichain.b(l - 1) + 1):
                out.append((l, j, h))
    return tuple(out)


def report_weights(antichain: Antichain, report: TangentReport) -> tuple[FineWeight, ...]:
    """The tangent weights listed by a report, in report order."""
    weights = [FineWeight.x_move(i, j) for i, j in report.linear_x]
    weights += [FineWeight.y_move(k, h) for k, h in report.linear_y]
    weights += [
        FineWeight.of_transition(antichain.a(l), j, antichain.b(l), h)
        for l, j, h in report.quadratic
    ]
    return tuple(weights)


def tangent_dimension_formula(antichain: Antichain) -> TangentReport:
    """Assemble the full weight census and its total dimension.

    The emitted weights are checked to be pairwise distinct; each weight
    space has dimension at most one, so a collision would mean the interval
    conditions above were applied incorrectly.
    """
    xs, ys = linear_tangent_weights(antichain)
    quad = quadratic_tangent_weights(antichain)
    report = TangentReport(xs, ys, quad, len(xs) + len(ys) + len(quad))
    weights = report_weights(antichain, report)
    if len(set(weights)) != len(weights):
        raise InvariantViolation("tangent weights are not pairwise distinct")
    return report


def formula_weights(antichain: Antichain) -> tuple[FineWeight, ...]:
    """Shorthand for the weight list of the assembled report."""
    report = tangent_dimension_formula(antichain)
    return report_weights(antichain, report)
