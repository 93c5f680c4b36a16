"""Brute-force oracles shared by the test suite.

These deliberately use the slowest obviously-correct method available so the
library routines they check cannot share a bug with them.
"""

import itertools

from cs_hilbert import Antichain, GridShape
from cs_hilbert.ideals import Monomial, SquareFreeIdeal


def all_grids(max_m, max_n):
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            yield GridShape(m, n)


def order_ideal_size_inclusion_exclusion(points):
    """|union of down-sets| by inclusion-exclusion over point subsets."""
    total = 0
    points = list(points)
    for r in range(1, len(points) + 1):
        sign = 1 if r % 2 else -1
        for subset in itertools.combinations(points, r):
            meet_a = min(a for a, _ in subset)
            meet_b = min(b for _, b in subset)
            total += sign * meet_a * meet_b
    return total


def antichains_by_subset_filter(shape):
    """Every antichain of the grid, found by filtering all point subsets."""
    cells = list(shape.cells())
    found = set()
    for r in range(len(cells) + 1):
        for subset in itertools.combinations(cells, r):
            comparable = any(
                p != q and p[0] <= q[0] and p[1] <= q[1]
                for p in subset
                for q in subset
            )
            if not comparable:
                found.add(tuple(sorted(subset)))
    return found


def weak_compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def brute_hilbert_value(ideal, d1, d2):
    """Standard-monomial count by enumerating every exponent vector."""
    m, n = ideal.shape.m, ideal.shape.n
    count = 0
    for u in weak_compositions(d1, m):
        for v in weak_compositions(d2, n):
            if not ideal.contains_monomial(Monomial(u, v)):
                count += 1
    return count


def staircase(s, shape):
    """The antichain (1, s), (2, s-1), ..., (s, 1)."""
    return Antichain(tuple((l, s + 1 - l) for l in range(1, s + 1)), shape)


def bidegree_one_one_ideal(shape, cells):
    """Ideal generated by x_a * y_b over the given grid cells."""
    return SquareFreeIdeal.from_monomials(
        shape, [Monomial.xy(shape, a, b) for a, b in cells]
    )
