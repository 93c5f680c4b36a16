"""Independent tangent-space computation by exact rational linear algebra.

The tangent space at the ideal of an antichain is the degree-(0, 0) part of
Hom_S(J, S/J).  Since J is generated in bidegree (1, 1) and has regularity
at most 2, a linear map on the generators extends to an S-module map exactly
when it is compatible with the two evident families of first syzygies: pairs
of generators sharing a y variable (compared after multiplying by the
opposite x variables) and pairs sharing an x variable (symmetrically in y).

This module assembles those compatibility constraints as an exact rational
linear system over the unknown generator-to-target coefficients and computes
its kernel, one torus-weight block at a time.  No floating point is used
anywhere, so agreement with the closed-form census in
:mod:`cs_hilbert.tangent` is an exact integer statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantViolation
from .grid import Antichain, order_ideal
from .tangent import FineWeight

# an unknown is (source generator index pair, target monomial index pair)
Unknown = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise DomainError("matrix entries do not match the declared dimensions")

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(tuple(r) for r in rows))

    def multiply_vector(self, vector) -> tuple[Fraction, ...]:
        if len(vector) != self.cols:
            raise DomainError("vector length does not match the column count")
        return tuple(
            sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.entries
        )


def rational_kernel(matrix: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel, via exact Gauss-Jordan elimination.

    Returns one vector per free column; the kernel dimension is
    cols - rank(matrix).
    """
    rows = [list(row) for row in matrix.entries]
    ncols = matrix.cols
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        rows[r] = [x / pivot for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    in_pivots = set(pivot_cols)
    basis = []
    for free in (c for c in range(ncols) if c not in in_pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -rows[i][free]
        basis.append(tuple(vec))
    return basis


@dataclass(frozen=True)
class HomBasis:
    """Kernel of the syzygy-compatibility system at an antichain ideal.

    ``unknowns`` lists the coefficient slots ((i, k), (j, h)) with (i, k) in
    the order ideal and (j, h) outside it; ``weights`` is parallel to
    ``unknowns``; every kernel vector is supported on a single weight.
    """

    unknowns: tuple[Unknown, ...]
    weights: tuple[FineWeight, ...]
    kernel_basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.unknowns) != len(self.weights):
            raise InvariantViolation("unknowns and weights are not parallel")
        for vec in self.kernel_basis:
            if len(vec) != len(self.unknowns):
                raise InvariantViolation("kernel vector length mismatch")
            support = {self.weights[t] for t, val in enumerate(vec) if val != 0}
            if len(support) != 1:
                raise InvariantViolation("kernel vector is not weight-homogeneous")

    @property
    def dimension(self) -> int:
        return len(self.kernel_basis)

    def weight_of_unknown(self, unknown: Unknown) -> FineWeight:
        return self.weights[self.unknowns.index(unknown)]


def _syzygy_rows(inside, outside, members, index):
    """Yield the constraint rows as sparse {unknown index: coefficient} maps.

    Each row matches one standard-monomial coordinate of one syzygy; entries
    multiplied into the ideal are dropped on the spot.
    """
    rows: list[dict[int, int]] = []

    by_y: dict[int, list[int]] = {}
    by_x: dict[int, list[int]] = {}
    for a, b in inside:
        by_y.setdefault(b, []).append(a)
        by_x.setdefault(a, []).append(b)

    # generators x_i y_k and x_j y_k: compare x_j phi(x_i y_k) with
    # x_i phi(x_j y_k) in the degree-(2, 1) standard monomials
    for k, xs in sorted(by_y.items()):
        xs.sort()
        for pos_i in range(len(xs)):
            for pos_j in range(pos_i + 1, len(xs)):
                i, j = xs[pos_i], xs[pos_j]
                row_map: dict[tuple, dict[int, int]] = {}
                for c, d in outside:
                    if (j, d) not in members:
                        key = (tuple(sorted((j, c))), d)
                        entry = row_map.setdefault(key, {})
                        t = index[((i, k), (c, d))]
                        entry[t] = entry.get(t, 0) + 1
                    if (i, d) not in members:
                        key = (tuple(sorted((i, c))), d)
                        entry = row_map.setdefault(key, {})
                        t = index[((j, k), (c, d))]
                        entry[t] = entry.get(t, 0) - 1
                rows.extend(
                    {t: c for t, c in entry.items() if c}
                    for entry in row_map.values()
                    if any(entry.values())
                )

    # generators x_i y_k and x_i y_h: compare y_h phi(x_i y_k) with
    # y_k phi(x_i y_h) in the degree-(1, 2) standard monomials
    for i, ys in sorted(by_x.items()):
        ys.sort()
        for pos_k in range(len(ys)):
            for pos_h in range(pos_k + 1, len(ys)):
                k, h = ys[pos_k], ys[pos_h]
                row_map = {}
                for c, d in outside:
                    if (c, h) not in members:
                        key = (c, tuple(sorted((d, h))))
                        entry = row_map.setdefault(key, {})
                        t = index[((i, k), (c, d))]
                        entry[t] = entry.get(t, 0) + 1
                    if (c, k) not in members:
                        key = (c, tuple(sorted((d, k))))
                        entry = row_map.setdefault(key, {})
                        t = index[((i, h), (c, d))]
                        entry[t] = entry.get(t, 0) - 1
                rows.extend(
                    {t: c for t, c in entry.items() if c}
                    for entry in row_map.values()
                    if any(entry.values())
                )

    return rows


def tangent_hom_space(antichain: Antichain) -> HomBasis:
    """Solve the syzygy-compatibility system and return its kernel.

    The constraint matrix only couples unknowns of equal torus weight; that
    block structure is asserted during assembly and the kernel is computed
    one weight block at a time, which yields the weight decomposition for
    free.
    """
    shape = antichain.shape
    members = order_ideal(antichain).members
    inside = sorted(members)
    outside = [cell for cell in shape.cells() if cell not in members]

    unknowns = tuple((src, dst) for src in inside for dst in outside)
    index = {unknown: t for t, unknown in enumerate(unknowns)}
    weights = tuple(
        FineWeight.of_transition(src[0], dst[0], src[1], dst[1]) for src, dst in unknowns
    )

    blocks: dict[FineWeight, list[int]] = {}
    for t, w in enumerate(weights):
        blocks.setdefault(w, []).append(t)

    rows_by_weight: dict[FineWeight, list[dict[int, int]]] = {}
    for row in _syzygy_rows(inside, outside, members, index):
        row_weights = {weights[t] for t in row}
        if len(row_weights) != 1:
            raise InvariantViolation("a syzygy row couples distinct torus weights")
        rows_by_weight.setdefault(row_weights.pop(), []).append(row)

    kernel: list[tuple[Fraction, ...]] = []
    for weight in sorted(blocks, key=FineWeight.sort_key):
        cols = blocks[weight]
        local_rows = rows_by_weight.get(weight)
        if local_rows:
            matrix = RationalMatrix.from_rows(
                [[row.get(t, 0) for t in cols] for row in local_rows]
            )
            local_basis = rational_kernel(matrix)
        else:
            local_basis = [
                tuple(Fraction(1 if p == q else 0) for q in range(len(cols)))
                for p in range(len(cols))
            ]
        for local in local_basis:
            vec = [Fraction(0)] * len(unknowns)
            for pos, t in enumerate(cols):
                vec[t] = local[pos]
            kernel.append(tuple(vec))
    return HomBasis(unknowns=unknowns, weights=weights, kernel_basis=tuple(kernel))


def tangent_dimension_oracle(antichain: Antichain) -> int:
    """Tangent dimension as the kernel dimension of the constraint system."""
    return tangent_hom_space(antichain).dimension


def weight_decomposition(basis: HomBasis) -> dict[FineWeight, int]:
    """Dimension of each nonzero weight space of the kernel.

    A kernel vector supported on more than one weight signals a constraint
    assembly bug and raises.
    """
    counts: dict[FineWeight, int] = {}
    for vec in basis.kernel_basis:
        support = {basis.weights[t] for t, val in enumerate(vec) if val != 0}
        if len(support) != 1:
            raise InvariantViolation("kernel vector mixes torus weights")
        weight = support.pop()
        counts[weight] = counts.get(weight, 0) + 1
    return counts
