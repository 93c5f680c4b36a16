import math

import pytest

from cs_hilbert import (
    Antichain,
    DomainError,
    GridShape,
    HilbertTable,
    PreconditionError,
    antichain_of_ideal,
    cutting_threshold,
    default_box,
    enumerate_antichains,
    hilbert_table,
    ideal_intersection,
    ideal_of_antichain,
    ideal_sum,
    is_borel_fixed_radical,
    lift_cut_ideals,
    normalize_antichain,
    order_ideal,
)
from cs_hilbert.ideals import Monomial, SquareFreeIdeal
from helpers import all_grids, bidegree_one_one_ideal, brute_hilbert_value


def antichain(points, m, n):
    return normalize_antichain(points, GridShape(m, n))


class TestMonomial:
    def test_bidegree_and_supports(self):
        g = Monomial((1, 0, 1), (0, 2))
        assert g.bidegree == (2, 2)
        assert g.x_support == (1, 3)
        assert g.y_support == (2,)
        assert not g.is_squarefree()

    def test_divides_and_lcm(self):
        shape = GridShape(2, 2)
        a = Monomial.xy(shape, 1, 1)
        b = Monomial.squarefree(shape, (1, 2), (1,))
        assert a.divides(b)
        assert not b.divides(a)
        assert a.lcm(Monomial.xy(shape, 2, 2)) == Monomial.squarefree(shape, (1, 2), (1, 2))

    def test_ring_mismatch_rejected(self):
        with pytest.raises(DomainError):
            Monomial((1,), (0,)).divides(Monomial((1, 0), (0,)))

    def test_str(self):
        shape = GridShape(2, 2)
        assert str(Monomial.xy(shape, 2, 1)) == "x2*y1"
        assert str(Monomial((0, 0), (0, 0))) == "1"


class TestSquareFreeIdeal:
    def test_constructor_rejects_redundant_generators(self):
        shape = GridShape(2, 2)
        with pytest.raises(DomainError):
            SquareFreeIdeal(shape, (Monomial.x_var(shape, 1), Monomial.xy(shape, 1, 1)))

    def test_from_monomials_minimalizes(self):
        shape = GridShape(2, 2)
        ideal = SquareFreeIdeal.from_monomials(
            shape, [Monomial.xy(shape, 1, 1), Monomial.x_var(shape, 1)]
        )
        assert ideal.generators == (Monomial.x_var(shape, 1),)

    def test_json_round_trip(self):
        ideal = ideal_of_antichain(antichain([(1, 2), (2, 1)], 3, 3))
        assert SquareFreeIdeal.from_json(ideal.to_json()) == ideal


class TestIdealOfAntichain:
    def test_example_grid_8x7(self):
        ideal = ideal_of_antichain(antichain([(1, 6), (2, 4), (5, 1)], 8, 7))
        assert len(ideal.generators) == 13
        assert all(g.bidegree == (1, 1) for g in ideal.generators)

    def test_empty_antichain_gives_zero_ideal(self):
        assert ideal_of_antichain(antichain([], 3, 3)).is_zero()

    def test_corner_point(self):
        shape = GridShape(2, 2)
        ideal = ideal_of_antichain(antichain([(1, 1)], 2, 2))
        assert ideal.generators == (Monomial.xy(shape, 1, 1),)


class TestBorelFixed:
    def test_examples(self):
        shape = GridShape(2, 2)
        good = bidegree_one_one_ideal(shape, [(1, 1), (1, 2)])
        assert is_borel_fixed_radical(good)
        bad = bidegree_one_one_ideal(shape, [(2, 1)])
        assert not is_borel_fixed_radical(bad)
        assert is_borel_fixed_radical(SquareFreeIdeal.zero(shape))

    def test_round_trip_examples(self):
        shape = GridShape(2, 2)
        ideal = bidegree_one_one_ideal(shape, [(1, 1), (1, 2), (2, 1)])
        assert antichain_of_ideal(ideal).points == ((1, 2), (2, 1))
        lone = bidegree_one_one_ideal(shape, [(1, 1)])
        assert antichain_of_ideal(lone).points == ((1, 1),)

    def test_preconditions(self):
        shape = GridShape(2, 2)
        with pytest.raises(PreconditionError, match="bidegree"):
            antichain_of_ideal(SquareFreeIdeal(shape, (Monomial.x_var(shape, 1),)))
        with pytest.raises(PreconditionError, match="exchange"):
            antichain_of_ideal(bidegree_one_one_ideal(shape, [(2, 1)]))

    @pytest.mark.parametrize("shape", list(all_grids(5, 5)), ids=str)
    def test_round_trip_sweep(self, shape):
        for a in enumerate_antichains(shape):
            ideal = ideal_of_antichain(a)
            assert is_borel_fixed_radical(ideal)
            assert antichain_of_ideal(ideal) == a

    @pytest.mark.parametrize("shape", list(all_grids(3, 3)), ids=str)
    def test_exchange_characterizes_antichain_ideals(self, shape):
        # over every ideal generated in bidegree (1, 1), the exchange test
        # holds exactly on the antichain ideals, where the round trip is the
        # identity
        import itertools

        images = {ideal_of_antichain(a) for a in enumerate_antichains(shape)}
        cells = list(shape.cells())
        for r in range(len(cells) + 1):
            for subset in itertools.combinations(cells, r):
                ideal = bidegree_one_one_ideal(shape, subset)
                assert is_borel_fixed_radical(ideal) == (ideal in images)
                if ideal in images:
                    assert ideal_of_antichain(antichain_of_ideal(ideal)) == ideal


class TestSumIntersection:
    def test_sum_examples(self):
        shape = GridShape(2, 2)
        x1 = SquareFreeIdeal.from_monomials(shape, [Monomial.x_var(shape, 1)])
        y1 = SquareFreeIdeal.from_monomials(shape, [Monomial.y_var(shape, 1)])
        xy = SquareFreeIdeal.from_monomials(shape, [Monomial.xy(shape, 1, 1)])
        assert len(ideal_sum(x1, y1).generators) == 2
        assert ideal_sum(xy, x1) == x1

    def test_intersection_examples(self):
        shape = GridShape(2, 2)
        x1 = SquareFreeIdeal.from_monomials(shape, [Monomial.x_var(shape, 1)])
        y1 = SquareFreeIdeal.from_monomials(shape, [Monomial.y_var(shape, 1)])
        both = SquareFreeIdeal.from_monomials(
            shape, [Monomial.x_var(shape, 1), Monomial.x_var(shape, 2)]
        )
        assert ideal_intersection(x1, y1).generators == (Monomial.xy(shape, 1, 1),)
        assert ideal_intersection(y1, both) == bidegree_one_one_ideal(shape, [(1, 1), (2, 1)])
        assert ideal_intersection(y1, both) == ideal_of_antichain(antichain([(2, 1)], 2, 2))

    def test_intersection_idempotent(self):
        ideal = ideal_of_antichain(antichain([(1, 2), (3, 1)], 3, 3))
        assert ideal_intersection(ideal, ideal) == ideal

    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            ideal_sum(
                SquareFreeIdeal.zero(GridShape(2, 2)), SquareFreeIdeal.zero(GridShape(2, 3))
            )


class TestLiftCutIdeals:
    def test_small_example(self):
        shape = GridShape(2, 2)
        first, second = lift_cut_ideals(antichain([(2, 1)], 2, 2))
        assert first.generators == (Monomial.y_var(shape, 1),)
        assert second.generators == (Monomial.x_var(shape, 1), Monomial.x_var(shape, 2))
        assert ideal_sum(first, second) == SquareFreeIdeal.from_monomials(
            shape,
            [Monomial.x_var(shape, 1), Monomial.x_var(shape, 2), Monomial.y_var(shape, 1)],
        )

    def test_example_grid_12x12_generator_counts(self):
        from cs_hilbert import cut

        a = antichain([(1, 11), (2, 10), (5, 8), (7, 6), (8, 3), (9, 2), (10, 1)], 12, 12)
        first, second = lift_cut_ideals(a)
        pieces = cut(a)
        bq, aq = a.b(pieces.q), a.a(pieces.q)
        assert len(first.generators) == bq + len(order_ideal(pieces.left_antichain))
        assert len(second.generators) == aq + len(order_ideal(pieces.right_antichain))

    def test_threshold_zero_rejected(self):
        with pytest.raises(PreconditionError):
            lift_cut_ideals(antichain([(1, 1)], 2, 2))

    @pytest.mark.parametrize("shape", list(all_grids(5, 5)), ids=str)
    def test_cut_identities_sweep(self, shape):
        for a in enumerate_antichains(shape):
            if not a.points or cutting_threshold(a) == 0:
                continue
            q = cutting_threshold(a)
            first, second = lift_cut_ideals(a)
            assert ideal_intersection(first, second) == ideal_of_antichain(a)
            span = SquareFreeIdeal.from_monomials(
                shape,
                [Monomial.x_var(shape, i) for i in range(1, a.a(q) + 1)]
                + [Monomial.y_var(shape, j) for j in range(1, a.b(q) + 1)],
            )
            assert ideal_sum(first, second) == span


class TestHilbertTable:
    def test_zero_ideal_full_polynomial_ring(self):
        table = hilbert_table(SquareFreeIdeal.zero(GridShape(2, 2)), (3, 3))
        for d1 in range(4):
            for d2 in range(4):
                assert table.value(d1, d2) == (d1 + 1) * (d2 + 1)

    def test_single_quadric(self):
        ideal = ideal_of_antichain(antichain([(1, 1)], 2, 2))
        assert hilbert_table(ideal, (1, 1)).value(1, 1) == 3

    def test_example_grid_8x7(self):
        ideal = ideal_of_antichain(antichain([(1, 6), (2, 4), (5, 1)], 8, 7))
        assert hilbert_table(ideal, (1, 1)).value(1, 1) == 56 - 13

    @pytest.mark.parametrize(
        "points,m,n",
        [([], 2, 3), ([(1, 1)], 2, 2), ([(2, 2)], 3, 3), ([(1, 3), (3, 1)], 3, 3), ([(2, 1)], 2, 2)],
    )
    def test_matches_brute_force_on_antichain_ideals(self, points, m, n):
        ideal = ideal_of_antichain(antichain(points, m, n))
        table = hilbert_table(ideal, (3, 3))
        for d1 in range(4):
            for d2 in range(4):
                assert table.value(d1, d2) == brute_hilbert_value(ideal, d1, d2)

    def test_matches_brute_force_on_mixed_degree_generators(self):
        shape = GridShape(3, 3)
        first, second = lift_cut_ideals(antichain([(1, 3), (3, 1)], 3, 3))
        for ideal in (first, second, ideal_sum(first, second)):
            table = hilbert_table(ideal, (4, 4))
            for d1 in range(5):
                for d2 in range(5):
                    assert table.value(d1, d2) == brute_hilbert_value(ideal, d1, d2)
        # intersections can carry generators with two variables on a side
        big = ideal_intersection(
            bidegree_one_one_ideal(shape, [(1, 1)]), bidegree_one_one_ideal(shape, [(2, 2)])
        )
        assert big.generators[0].bidegree == (2, 2)
        table = hilbert_table(big, (3, 3))
        for d1 in range(4):
            for d2 in range(4):
                assert table.value(d1, d2) == brute_hilbert_value(big, d1, d2)

    @pytest.mark.parametrize("shape", list(all_grids(4, 4)), ids=str)
    def test_degree_one_one_and_concentration(self, shape):
        box = default_box(shape)
        for a in enumerate_antichains(shape):
            ideal = ideal_of_antichain(a)
            table = hilbert_table(ideal, box)
            assert table.value(1, 1) == shape.m * shape.n - len(order_ideal(a))
            for d in range(box[0] + 1):
                assert table.value(d, 0) == math.comb(d + shape.m - 1, shape.m - 1)
            for d in range(box[1] + 1):
                assert table.value(0, d) == math.comb(d + shape.n - 1, shape.n - 1)

    @pytest.mark.parametrize("shape", list(all_grids(5, 5)), ids=str)
    def test_exact_sequence_identity_sweep(self, shape):
        box = default_box(shape)
        for a in enumerate_antichains(shape):
            if not a.points or cutting_threshold(a) == 0:
                continue
            first, second = lift_cut_ideals(a)
            t_meet = hilbert_table(ideal_of_antichain(a), box)
            t_first = hilbert_table(first, box)
            t_second = hilbert_table(second, box)
            t_join = hilbert_table(ideal_sum(first, second), box)
            for d1 in range(box[0] + 1):
                for d2 in range(box[1] + 1):
                    assert t_meet.value(d1, d2) == (
                        t_first.value(d1, d2) + t_second.value(d1, d2) - t_join.value(d1, d2)
                    )

    def test_table_validation_and_json(self):
        table = hilbert_table(SquareFreeIdeal.zero(GridShape(2, 2)), (2, 2))
        assert HilbertTable.from_json(table.to_json()) == table
        assert table.covers((1, 2)) and not table.covers((3, 0))
        with pytest.raises(DomainError):
            table.value(5, 0)
        with pytest.raises(DomainError):
            HilbertTable((1, 1), ((1,),))
        with pytest.raises(DomainError):
            hilbert_table(SquareFreeIdeal.zero(GridShape(2, 2)), (-1, 2))
