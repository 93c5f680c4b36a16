import math

from cs_hilbert import GridShape
from cs_hilbert.verify import (
    CHECK_NAMES,
    check_antichain,
    run_cases,
    sample_antichains,
    sweep_antichains,
)


def test_sweep_case_counts():
    cases = sweep_antichains(3, 3, include_smaller=True)
    expected = sum(math.comb(m + n, m) for m in range(1, 4) for n in range(1, 4))
    assert len(cases) == expected
    assert len(sweep_antichains(3, 3)) == math.comb(6, 3)


def test_sweep_is_clean():
    summary = run_cases(sweep_antichains(3, 3, include_smaller=True))
    assert summary["ok"]
    assert summary["counterexamples"] == []
    assert summary["cases_checked"] == 62
    assert summary["check_counts"]["dimension_agreement"] == 62
    assert set(summary["check_counts"]) == set(CHECK_NAMES)


def test_parallel_matches_serial():
    cases = sweep_antichains(3, 2, include_smaller=True)
    assert run_cases(cases, jobs=2) == run_cases(cases, jobs=1)


def test_sampling_is_reproducible():
    a = sample_antichains(GridShape(5, 5), 40, seed=99)
    b = sample_antichains(GridShape(5, 5), 40, seed=99)
    assert [x.points for x in a] == [x.points for x in b]
    c = sample_antichains(GridShape(5, 5), 40, seed=100)
    assert [x.points for x in a] != [x.points for x in c]


def test_record_structure():
    (case,) = sweep_antichains(1, 1)[1:2]
    record = check_antichain(case)
    assert record["m"] == record["n"] == 1
    assert record["failures"] == []
    assert "dimension_agreement" in record["checks_run"]
