"""Hilbert-scheme dimension via the cutting recursion.

For a nonempty antichain with positive cutting threshold q, the dimension at
the grid shape (m, n) splits as

    dim = dim(left piece) + dim(right piece) + a_q (m - a_q) + b_q (n - b_q),

where the two pieces are the re-indexed sub-antichains of the cut.  The
recursion bottoms out at the empty antichain (a single reduced point, so
dimension 0) and at the two threshold-zero shapes: a lone point (1, 1),
whose ideal is one bigraded quadric, and the staircase a_l = l,
b_l = s + 1 - l with s >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, InvariantViolation, PreconditionError
from .grid import Antichain, GridShape, cut, cutting_threshold, enumerate_antichains
from .ideals import HilbertTable, hilbert_table, ideal_of_antichain

BRANCH_EMPTY = "empty"
BRANCH_CUT = "cut"
BRANCH_QUADRIC = "quadric"
BRANCH_STAIRCASE = "staircase"


@dataclass(frozen=True)
class DimensionTrace:
    """One node of the recursion tree behind a dimension computation.

    ``offset`` is the amount contributed locally: the base-case dimension on
    leaves, and a_q (m - a_q) + b_q (n - b_q) on cut nodes.  ``subtotal`` is
    the dimension of the subtree, so the root subtotal is the answer.
    """

    shape: tuple[int, int]
    antichain: tuple[tuple[int, int], ...]
    q: Optional[int]
    branch: str
    offset: int
    subtotal: int
    children: tuple["DimensionTrace", ...]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "antichain": [list(p) for p in self.antichain],
            "q": self.q,
            "branch": self.branch,
            "offset": self.offset,
            "subtotal": self.subtotal,
            "children": [child.to_json() for child in self.children],
        }


def _staircase_or_die(antichain: Antichain) -> None:
    # threshold 0 forces the staircase shape; assert it rather than trust it
    s = antichain.s
    for l in range(1, s + 1):
        if antichain.a(l) != l or antichain.b(l) != s + 1 - l:
            raise InvariantViolation(
                f"threshold 0 but antichain {antichain.points} is not the staircase"
            )


def hilbert_scheme_dimension(antichain: Antichain) -> tuple[int, DimensionTrace]:
    """Dimension of the Hilbert scheme through the ideal of the antichain,
    together with the full recursion trace.

    Shapes reached through cuts may be degenerate (zero variables on one
    side); they only ever carry the empty antichain and contribute 0.
    """
    shape = (antichain.shape.m, antichain.shape.n)
    if antichain.is_empty():
        return 0, DimensionTrace(shape, (), None, BRANCH_EMPTY, 0, 0, ())
    m, n = shape
    q = cutting_threshold(antichain)
    if q >= 1:
        pieces = cut(antichain)
        left_dim, left_trace = hilbert_scheme_dimension(pieces.left_antichain)
        right_dim, right_trace = hilbert_scheme_dimension(pieces.right_antichain)
        aq, bq = antichain.a(q), antichain.b(q)
        offset = aq * (m - aq) + bq * (n - bq)
        total = left_dim + right_dim + offset
        trace = DimensionTrace(
            shape, antichain.points, q, BRANCH_CUT, offset, total, (left_trace, right_trace)
        )
        return total, trace
    _staircase_or_die(antichain)
    s = antichain.s
    if s == 1:
        dim = m * n - 1
        return dim, DimensionTrace(shape, antichain.points, 0, BRANCH_QUADRIC, dim, dim, ())
    dim = (m - s - 1) * (s + 1) + (n - s - 1) * (s + 1) + (s + 1) ** 2 - 1
    return dim, DimensionTrace(shape, antichain.points, 0, BRANCH_STAIRCASE, dim, dim, ())


def linear_part_offset(alpha: int, beta: int, shape: GridShape) -> int:
    """Dimension correction for stripping independent linear generators.

    An ideal with alpha independent generators of degree (1, 0) and beta of
    degree (0, 1) fibers over the product of the two subspace Grassmannians,
    adding alpha (m - alpha) + beta (n - beta) to the dimension of the
    stripped problem.
    """
    if not 0 <= alpha <= shape.m:
        raise DomainError(f"alpha must satisfy 0 <= alpha <= {shape.m}, got {alpha}")
    if not 0 <= beta <= shape.n:
        raise DomainError(f"beta must satisfy 0 <= beta <= {shape.n}, got {beta}")
    return alpha * (shape.m - alpha) + beta * (shape.n - beta)


def cs_recognize(
    table: HilbertTable, shape: GridShape, box: Optional[tuple[int, int]] = None
) -> Optional[Antichain]:
    """Find the antichain whose ideal has the given Hilbert function.

    Candidates are compared on the box [0, m] x [0, n] (configurable).  The
    match is unique when it exists; two distinct matches would contradict
    uniqueness of the distinguished fixed point and raise instead of being
    silently deduplicated.
    """
    if box is None:
        box = (shape.m, shape.n)
    if not table.covers(box):
        raise PreconditionError(f"table box {table.box} does not cover {box}")
    matches = []
    for antichain in enumerate_antichains(shape):
        candidate = hilbert_table(ideal_of_antichain(antichain), box)
        if all(
            candidate.value(d1, d2) == table.value(d1, d2)
            for d1 in range(box[0] + 1)
            for d2 in range(box[1] + 1)
        ):
            matches.append(antichain)
    if len(matches) > 1:
        raise InvariantViolation(
            "distinct antichains share a Hilbert function on the box "
            f"{box}: {[a.points for a in matches]}"
        )
    return matches[0] if matches else None
