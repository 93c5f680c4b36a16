"""Falsification harness: per-antichain consistency checks and sweep drivers.

Every identity the library claims is rechecked case by case: the closed-form
tangent census against the rational-kernel computation and the cutting
recursion, multiplicity-freeness of the weight decomposition, the two cut
ideal identities, the exact-sequence relation between the four Hilbert
tables, and the round trip between antichains and their ideals.  A sweep
returns counterexample records instead of raising, so disagreement is data,
not a crash.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from .dimension import hilbert_scheme_dimension
from .grid import Antichain, GridShape, cut, cutting_threshold, enumerate_antichains
from .ideals import (
    Monomial,
    SquareFreeIdeal,
    default_box,
    hilbert_table,
    ideal_intersection,
    ideal_of_antichain,
    ideal_sum,
    is_borel_fixed_radical,
    antichain_of_ideal,
    lift_cut_ideals,
)
from .oracle import tangent_hom_space, weight_decomposition
from .tangent import formula_weights, tangent_dimension_formula

CHECK_NAMES = (
    "dimension_agreement",
    "multiplicity_free",
    "weight_sets_match",
    "cutting_additivity",
    "intersection_identity",
    "sum_identity",
    "hilbert_exact_sequence",
    "borel_round_trip",
)


def check_antichain(antichain: Antichain) -> dict:
    """Run every applicable check on one antichain.

    Returns a record with the case key, the list of checks that ran, and a
    (hopefully empty) list of failures carrying enough detail to reproduce.
    """
    failures = []
    ran = []

    def run(name, ok, detail=""):
        ran.append(name)
        if not ok:
            failures.append({"check": name, "detail": detail})

    report = tangent_dimension_formula(antichain)
    hom = tangent_hom_space(antichain)
    recursion_dim, _ = hilbert_scheme_dimension(antichain)
    run(
        "dimension_agreement",
        report.total == hom.dimension == recursion_dim,
        f"formula={report.total} oracle={hom.dimension} recursion={recursion_dim}",
    )

    decomposition = weight_decomposition(hom)
    run(
        "multiplicity_free",
        all(mult == 1 for mult in decomposition.values()),
        f"multiplicities={sorted(decomposition.values())}",
    )
    run(
        "weight_sets_match",
        set(decomposition) == set(formula_weights(antichain)),
        "oracle and formula emit different weight sets",
    )

    ideal = ideal_of_antichain(antichain)
    run(
        "borel_round_trip",
        is_borel_fixed_radical(ideal) and antichain_of_ideal(ideal) == antichain,
        "antichain does not survive the ideal round trip",
    )

    if not antichain.is_empty() and cutting_threshold(antichain) >= 1:
        pieces = cut(antichain)
        m, n = antichain.shape.m, antichain.shape.n
        aq = antichain.a(pieces.q)
        bq = antichain.b(pieces.q)
        left_total = tangent_dimension_formula(pieces.left_antichain).total
        right_total = tangent_dimension_formula(pieces.right_antichain).total
        offset = aq * (m - aq) + bq * (n - bq)
        run(
            "cutting_additivity",
            report.total == left_total + right_total + offset,
            f"total={report.total} left={left_total} right={right_total} offset={offset}",
        )

        first, second = lift_cut_ideals(antichain)
        run(
            "intersection_identity",
            ideal_intersection(first, second) == ideal,
            "intersection of the lifted ideals differs from the antichain ideal",
        )
        span = SquareFreeIdeal.from_monomials(
            antichain.shape,
            [Monomial.x_var(antichain.shape, a) for a in range(1, aq + 1)]
            + [Monomial.y_var(antichain.shape, b) for b in range(1, bq + 1)],
        )
        run(
            "sum_identity",
            ideal_sum(first, second) == span,
            "sum of the lifted ideals differs from the coordinate span",
        )

        box = default_box(antichain.shape)
        t_meet = hilbert_table(ideal, box)
        t_first = hilbert_table(first, box)
        t_second = hilbert_table(second, box)
        t_join = hilbert_table(ideal_sum(first, second), box)
        run(
            "hilbert_exact_sequence",
            all(
                t_meet.value(d1, d2)
                == t_first.value(d1, d2) + t_second.value(d1, d2) - t_join.value(d1, d2)
                for d1 in range(box[0] + 1)
                for d2 in range(box[1] + 1)
            ),
            "Hilbert tables violate the exact-sequence identity",
        )

    return {
        "m": antichain.shape.m,
        "n": antichain.shape.n,
        "antichain": [list(p) for p in antichain.points],
        "checks_run": ran,
        "failures": failures,
    }


def sweep_antichains(m: int, n: int, include_smaller: bool = False) -> list[Antichain]:
    """All antichains of the m x n grid, optionally of every smaller grid too."""
    shapes = (
        [GridShape(mm, nn) for mm in range(1, m + 1) for nn in range(1, n + 1)]
        if include_smaller
        else [GridShape(m, n)]
    )
    cases = []
    for shape in shapes:
        cases.extend(enumerate_antichains(shape))
    return cases


def sample_antichains(shape: GridShape, count: int, seed: int) -> list[Antichain]:
    """Seeded random antichains, drawn through column-height profiles."""
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        heights = sorted((rng.randint(0, shape.n) for _ in range(shape.m)), reverse=True)
        points = []
        for a in range(1, shape.m + 1):
            nxt = heights[a] if a < shape.m else 0
            if heights[a - 1] > nxt:
                points.append((a, heights[a - 1]))
        cases.append(Antichain(tuple(points), shape))
    return cases


def _check_chunk(chunk: list[Antichain]) -> list[dict]:
    return [check_antichain(antichain) for antichain in chunk]


def run_cases(cases: list[Antichain], jobs: int = 1) -> dict:
    """Check every case and aggregate a summary document.

    Results are merged in sorted case-key order, so the output does not
    depend on the degree of parallelism.
    """
    if jobs > 1 and len(cases) > 1:
        chunks = [cases[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [record for part in pool.map(_check_chunk, chunks) for record in part]
    else:
        results = _check_chunk(cases)
    results.sort(key=lambda rec: (rec["m"], rec["n"], rec["antichain"]))

    check_counts = {name: 0 for name in CHECK_NAMES}
    counterexamples = []
    for record in results:
        for name in record["checks_run"]:
            check_counts[name] += 1
        for failure in record["failures"]:
            counterexamples.append(
                {
                    "m": record["m"],
                    "n": record["n"],
                    "antichain": record["antichain"],
                    "check": failure["check"],
                    "detail": failure["detail"],
                }
            )
    return {
        "cases_checked": len(results),
        "check_counts": check_counts,
        "counterexamples": counterexamples,
        "ok": not counterexamples,
    }


__all__ = [
    "CHECK_NAMES",
    "check_antichain",
    "run_cases",
    "sample_antichains",
    "sweep_antichains",
]
