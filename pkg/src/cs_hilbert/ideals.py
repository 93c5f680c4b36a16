"""Square-free bigraded monomial ideal algebra.

Ideals live in S = k[x_1..x_m, y_1..y_n] with deg x_i = (1, 0) and
deg y_j = (0, 1), and are stored by their unique minimal generating sets.
Membership is divisibility against the generators, so sums, intersections,
and bigraded Hilbert functions stay entirely combinatorial; no Groebner
machinery is involved.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import DomainError, PreconditionError
from .grid import Antichain, GridShape, cutting_threshold, normalize_antichain, order_ideal

Bidegree = tuple[int, int]


@dataclass(frozen=True)
class Monomial:
    """A monomial x^u * y^v given by its two exponent vectors."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(e) for e in self.u))
        object.__setattr__(self, "v", tuple(int(e) for e in self.v))
        if any(e < 0 for e in self.u) or any(e < 0 for e in self.v):
            raise DomainError(f"negative exponent in monomial {self.u}, {self.v}")

    @property
    def bidegree(self) -> Bidegree:
        return (sum(self.u), sum(self.v))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.u) and all(e <= 1 for e in self.v)

    @property
    def x_support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.u) if e)

    @property
    def y_support(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, e in enumerate(self.v) if e)

    def divides(self, other: "Monomial") -> bool:
        self._check_compatible(other)
        return all(a <= b for a, b in zip(self.u, other.u)) and all(
            a <= b for a, b in zip(self.v, other.v)
        )

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_compatible(other)
        return Monomial(
            tuple(map(max, self.u, other.u)), tuple(map(max, self.v, other.v))
        )

    def _check_compatible(self, other: "Monomial") -> None:
        if len(self.u) != len(other.u) or len(self.v) != len(other.v):
            raise DomainError("monomials come from different rings")

    @classmethod
    def squarefree(cls, shape: GridShape, xs, ys) -> "Monomial":
        """Square-free monomial with the given 1-based variable indices."""
        u = [0] * shape.m
        v = [0] * shape.n
        for a in xs:
            if not 1 <= a <= shape.m:
                raise DomainError(f"x index {a} outside 1..{shape.m}")
            u[a - 1] = 1
        for b in ys:
            if not 1 <= b <= shape.n:
                raise DomainError(f"y index {b} outside 1..{shape.n}")
            v[b - 1] = 1
        return cls(tuple(u), tuple(v))

    @classmethod
    def xy(cls, shape: GridShape, a: int, b: int) -> "Monomial":
        return cls.squarefree(shape, (a,), (b,))

    @classmethod
    def x_var(cls, shape: GridShape, a: int) -> "Monomial":
        return cls.squarefree(shape, (a,), ())

    @classmethod
    def y_var(cls, shape: GridShape, b: int) -> "Monomial":
        return cls.squarefree(shape, (), (b,))

    def __str__(self) -> str:
        parts = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self.u) if e]
        parts += [f"y{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(self.v) if e]
        return "*".join(parts) if parts else "1"


def _generator_key(g: Monomial):
    # total degree first, then variable indices, so minimalization scans
    # potential divisors before their multiples and listings read naturally
    return (sum(g.u) + sum(g.v), g.x_support, g.y_support, g.u, g.v)


@dataclass(frozen=True)
class SquareFreeIdeal:
    """A square-free monomial ideal stored by its minimal generating set.

    The constructor demands an inclusion-irredundant generator list (passing a
    redundant one is treated as a caller bug); use ``from_monomials`` to build
    an ideal from an arbitrary generating set.
    """

    shape: GridShape
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators), key=_generator_key))
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g.u) != self.shape.m or len(g.v) != self.shape.n:
                raise DomainError(f"generator {g} does not fit shape {self.shape}")
            if not g.is_squarefree():
                raise DomainError(f"generator {g} is not square-free")
        for g, h in itertools.permutations(gens, 2):
            if g.divides(h):
                raise DomainError(f"generator {h} is redundant (divisible by {g})")

    @classmethod
    def from_monomials(cls, shape: GridShape, monomials) -> "SquareFreeIdeal":
        """Build the ideal generated by the given monomials, minimalized."""
        gens = sorted(set(monomials), key=_generator_key)
        minimal: list[Monomial] = []
        for g in gens:
            if not any(h.divides(g) for h in minimal):
                minimal.append(g)
        return cls(shape, tuple(minimal))

    @classmethod
    def zero(cls, shape: GridShape) -> "SquareFreeIdeal":
        return cls(shape, ())

    def is_zero(self) -> bool:
        return not self.generators

    def contains_monomial(self, monomial: Monomial) -> bool:
        return any(g.divides(monomial) for g in self.generators)

    def to_json(self) -> dict:
        return {
            "m": self.shape.m,
            "n": self.shape.n,
            "generators": [
                {"x": list(g.x_support), "y": list(g.y_support)} for g in self.generators
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SquareFreeIdeal":
        try:
            shape = GridShape(int(doc["m"]), int(doc["n"]))
            gens = [
                Monomial.squarefree(shape, entry["x"], entry["y"])
                for entry in doc["generators"]
            ]
        except (KeyError, TypeError, ValueError) as err:
            raise DomainError(f"malformed ideal document: {err}") from err
        return cls.from_monomials(shape, gens)


@dataclass(frozen=True)
class HilbertTable:
    """Values of a bigraded Hilbert function of a quotient on a finite box.

    Entry (d1, d2) is the dimension of the degree-(d1, d2) piece of S/I,
    stored row-major with d1 indexing rows.
    """

    box: tuple[int, int]
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "box", (int(self.box[0]), int(self.box[1])))
        object.__setattr__(
            self, "values", tuple(tuple(int(x) for x in row) for row in self.values)
        )
        d1, d2 = self.box
        if d1 < 0 or d2 < 0:
            raise DomainError(f"box sides must be >= 0, got {self.box}")
        if len(self.values) != d1 + 1 or any(len(row) != d2 + 1 for row in self.values):
            raise DomainError("table dimensions do not match the box")
        if any(x < 0 for row in self.values for x in row):
            raise DomainError("Hilbert function values must be non-negative")

    def value(self, d1: int, d2: int) -> int:
        if not (0 <= d1 <= self.box[0] and 0 <= d2 <= self.box[1]):
            raise DomainError(f"bidegree ({d1}, {d2}) outside box {self.box}")
        return self.values[d1][d2]

    def covers(self, box: tuple[int, int]) -> bool:
        return self.box[0] >= box[0] and self.box[1] >= box[1]

    def to_json(self) -> dict:
        return {"D1": self.box[0], "D2": self.box[1], "rows": [list(r) for r in self.values]}

    @classmethod
    def from_json(cls, doc: dict) -> "HilbertTable":
        try:
            return cls((int(doc["D1"]), int(doc["D2"])), tuple(tuple(r) for r in doc["rows"]))
        except (KeyError, TypeError, ValueError) as err:
            raise DomainError(f"malformed Hilbert table document: {err}") from err


def default_box(shape: GridShape) -> tuple[int, int]:
    """Verification box [0, m] x [0, n]; the regularity bound of 2 for the
    ideals in scope makes behavior on this box decisive."""
    return (shape.m, shape.n)


def ideal_of_antichain(antichain: Antichain) -> SquareFreeIdeal:
    """The ideal generated by x_a * y_b over all (a, b) in the order ideal.

    All generators sit in bidegree (1, 1), so the set is already minimal.
    """
    shape = antichain.shape
    gens = tuple(Monomial.xy(shape, a, b) for a, b in order_ideal(antichain).sorted_points())
    return SquareFreeIdeal(shape, gens)


def is_borel_fixed_radical(ideal: SquareFreeIdeal) -> bool:
    """Exchange test: lowering any variable index inside a generator must stay
    in the ideal, in both variable groups.

    Checking the swaps on generators suffices because membership is determined
    by divisibility against square-free generators.
    """
    for g in ideal.generators:
        for i in g.x_support:
            for h in range(1, i):
                u = list(g.u)
                u[i - 1] -= 1
                u[h - 1] += 1
                if not ideal.contains_monomial(Monomial(tuple(u), g.v)):
                    return False
        for k in g.y_support:
            for h in range(1, k):
                v = list(g.v)
                v[k - 1] -= 1
                v[h - 1] += 1
                if not ideal.contains_monomial(Monomial(g.u, tuple(v))):
                    return False
    return True


def antichain_of_ideal(ideal: SquareFreeIdeal) -> Antichain:
    """Inverse of ``ideal_of_antichain`` on its image.

    Requires every generator in bidegree (1, 1) and the exchange property;
    the antichain is then the set of maximal generator indices.
    """
    for g in ideal.generators:
        if g.bidegree != (1, 1):
            raise PreconditionError(
                f"generator {g} has bidegree {g.bidegree}; expected (1, 1)"
            )
    if not is_borel_fixed_radical(ideal):
        raise PreconditionError("ideal fails the exchange property")
    points = [(g.x_support[0], g.y_support[0]) for g in ideal.generators]
    return normalize_antichain(points, ideal.shape)


def _check_same_shape(left: SquareFreeIdeal, right: SquareFreeIdeal) -> None:
    if left.shape != right.shape:
        raise DomainError(f"shape mismatch: {left.shape} vs {right.shape}")


def ideal_sum(left: SquareFreeIdeal, right: SquareFreeIdeal) -> SquareFreeIdeal:
    _check_same_shape(left, right)
    return SquareFreeIdeal.from_monomials(left.shape, left.generators + right.generators)


def ideal_intersection(left: SquareFreeIdeal, right: SquareFreeIdeal) -> SquareFreeIdeal:
    """Intersection via pairwise lcm of generators, then minimalization."""
    _check_same_shape(left, right)
    lcms = [g.lcm(h) for g in left.generators for h in right.generators]
    return SquareFreeIdeal.from_monomials(left.shape, lcms)


def lift_cut_ideals(antichain: Antichain) -> tuple[SquareFreeIdeal, SquareFreeIdeal]:
    """The two ideals of the full ring whose intersection recovers the ideal
    of the antichain after a cut.

    The first contains all y variables up to b_q plus the order-ideal
    generators in the left sub-grid; the second contains all x variables up
    to a_q plus the order-ideal generators in the right sub-grid.
    """
    q = cutting_threshold(antichain)
    if q < 1:
        raise PreconditionError("lifted cut ideals require a positive cutting threshold")
    shape = antichain.shape
    aq, bq = antichain.a(q), antichain.b(q)
    ideal_points = order_ideal(antichain).sorted_points()
    first = [Monomial.y_var(shape, b) for b in range(1, bq + 1)]
    first += [Monomial.xy(shape, a, b) for a, b in ideal_points if a <= aq and b >= bq + 1]
    second = [Monomial.x_var(shape, a) for a in range(1, aq + 1)]
    second += [Monomial.xy(shape, a, b) for a, b in ideal_points if a >= aq + 1 and b <= bq]
    return (
        SquareFreeIdeal.from_monomials(shape, first),
        SquareFreeIdeal.from_monomials(shape, second),
    )


def _positive_compositions(total: int, parts: int) -> int:
    # number of ways to write total as an ordered sum of `parts` positive integers
    if parts == 0:
        return 1 if total == 0 else 0
    if total < parts:
        return 0
    return math.comb(total - 1, parts - 1)


def _minimal_masks(masks: list[int]) -> list[int]:
    minimal: list[int] = []
    for f in sorted(set(masks), key=lambda z: z.bit_count()):
        if not any(g & ~f == 0 for g in minimal):
            minimal.append(f)
    return minimal


def hilbert_table(ideal: SquareFreeIdeal, box: tuple[int, int]) -> HilbertTable:
    """Hilbert function of S/I on the box [0, D1] x [0, D2].

    Entry (d1, d2) counts monomials of that bidegree divisible by no
    generator.  Divisibility by a square-free monomial only depends on the
    support of the candidate, so the admissible support pairs are enumerated
    once and each is weighted by the number of positive exponent vectors
    landing on it.  The per-monomial count (the slow, obviously-correct
    enumeration) is kept in the test suite as the oracle for this routine.
    """
    D1, D2 = int(box[0]), int(box[1])
    if D1 < 0 or D2 < 0:
        raise DomainError(f"box sides must be >= 0, got ({D1}, {D2})")
    m, n = ideal.shape.m, ideal.shape.n

    gen_masks = []
    for g in ideal.generators:
        xmask = sum(1 << (a - 1) for a in g.x_support)
        ymask = sum(1 << (b - 1) for b in g.y_support)
        gen_masks.append((xmask, ymask))

    max_p = min(m, D1)
    max_t = min(n, D2)
    # pair_counts[p][t] = number of support pairs (S, T) with |S| = p, |T| = t
    # containing no generator support
    pair_counts = [[0] * (max_t + 1) for _ in range(max_p + 1)]
    for smask in range(1 << m):
        p = smask.bit_count()
        if p > max_p:
            continue
        forbidden = []
        dead = False
        for gx, gy in gen_masks:
            if gx & ~smask == 0:
                if gy == 0:
                    dead = True  # a pure-x generator divides every monomial on S
                    break
                forbidden.append(gy)
        if dead:
            continue
        banned = 0
        larger = []
        for f in _minimal_masks(forbidden):
            if f & (f - 1) == 0:
                banned |= f
            else:
                larger.append(f)
        larger = [f for f in larger if f & banned == 0]
        free = n - banned.bit_count()
        target = pair_counts[p]
        # inclusion-exclusion over the minimal multi-element forbidden supports;
        # the list is empty for ideals generated in bidegrees (1,1), (1,0), (0,1)
        for r in range(len(larger) + 1):
            sign = -1 if r % 2 else 1
            for picked in itertools.combinations(larger, r):
                union = 0
                for f in picked:
                    union |= f
                u = union.bit_count()
                for t in range(u, max_t + 1):
                    target[t] += sign * math.comb(free - u, t - u)

    weight_y = [
        [_positive_compositions(d2, t) for t in range(max_t + 1)] for d2 in range(D2 + 1)
    ]
    rows = []
    for d1 in range(D1 + 1):
        weight_x = [_positive_compositions(d1, p) for p in range(max_p + 1)]
        row = []
        for d2 in range(D2 + 1):
            wy = weight_y[d2]
            total = 0
            for p in range(max_p + 1):
                wx = weight_x[p]
                if not wx:
                    continue
                counts = pair_counts[p]
                total += wx * sum(counts[t] * wy[t] for t in range(max_t + 1))
            row.append(total)
        rows.append(tuple(row))
    return HilbertTable((D1, D2), tuple(rows))
