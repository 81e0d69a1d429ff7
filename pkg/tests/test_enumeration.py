import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbivcd.enumeration import (
    branch_data_solutions,
    cover_admissible,
    enumerate_covers,
    enumerate_period_multisets,
    enumerate_signatures,
)
from orbivcd.models import BranchDatum, EnumOptions, Signature, l_sum, orbifold_euler, rh_admissible


class TestPeriodMultisets:
    def test_zero_target(self):
        assert enumerate_period_multisets(0) == [()]
        assert enumerate_period_multisets(0, divisor_of=7) == [()]

    def test_six_halves(self):
        assert enumerate_period_multisets(3, divisor_of=2) == [(2, 2, 2, 2, 2, 2)]

    def test_target_one(self):
        assert enumerate_period_multisets(1) == [(2, 2)]

    def test_triangle_targets(self):
        found = enumerate_period_multisets(Fraction(85, 42))
        assert (2, 3, 7) in found
        assert all(len(ps) == 3 for ps in found)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            enumerate_period_multisets(Fraction(-1, 2))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 12), st.integers(1, 12))
    def test_exact_and_within_count_bounds(self, num, den):
        target = Fraction(num, den)
        if target > 3:
            return
        found = enumerate_period_multisets(target)
        assert found == sorted(set(found))
        for ps in found:
            assert list(ps) == sorted(ps)
            assert sum(Fraction(p - 1, p) for p in ps) == target
            assert math.ceil(target) <= len(ps) <= math.floor(2 * target)

    def test_divisor_constraint(self):
        for ps in enumerate_period_multisets(Fraction(13, 6), divisor_of=12):
            assert all(12 % p == 0 for p in ps)


class TestSignatures:
    def test_genus_two_involutions(self):
        assert enumerate_signatures(2, 2) == [Signature(0, (2,) * 6), Signature(1, (2, 2))]

    def test_trivial_subgroup(self):
        assert enumerate_signatures(3, 1) == [Signature(3)]

    def test_genus_three_involutions(self):
        assert enumerate_signatures(3, 2) == [
            Signature(0, (2,) * 8),
            Signature(1, (2, 2, 2, 2)),
            Signature(2),
        ]

    def test_hurwitz_group(self):
        assert enumerate_signatures(3, 168) == [Signature(0, (2, 3, 7))]

    def test_no_solutions(self):
        assert enumerate_signatures(2, 1000) == []

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            enumerate_signatures(1, 2)
        with pytest.raises(ValueError):
            enumerate_signatures(2, 0)

    def test_divisor_flag_widens_search(self):
        strict = set(enumerate_signatures(2, 5))
        wide = set(enumerate_signatures(2, 5, EnumOptions(periods_divide_order=False)))
        assert strict <= wide
        for s in wide:
            assert rh_admissible(2, 5, s)

    @pytest.mark.parametrize("g", [2, 3, 4])
    def test_every_fiber_admissible(self, g):
        for order in range(1, 25):
            for s in enumerate_signatures(g, order):
                assert rh_admissible(g, order, s)
                assert all(order % p == 0 for p in s.periods)


class TestBranchData:
    def test_examples(self):
        assert branch_data_solutions(2, 2) == [BranchDatum(2, (1,)), BranchDatum(2, (2, 2))]
        assert branch_data_solutions(3, 2) == [BranchDatum(3, (3, 3))]
        assert branch_data_solutions(5, 1) == [BranchDatum(5, (5,))]

    def test_local_degrees_sum_to_degree(self):
        for p in (2, 3, 4, 6, 12):
            for d in range(1, 13):
                for datum in branch_data_solutions(p, d):
                    assert datum.degree == d

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            branch_data_solutions(1, 2)
        with pytest.raises(ValueError):
            branch_data_solutions(2, 0)


class TestCovers:
    def test_hyperelliptic_witness(self, sig):
        cover = cover_admissible(sig("0;2,2,2,2,2,2"), 2, sig("2;"))
        assert cover is not None
        assert cover.branch_data == (BranchDatum(2, (1,)),) * 6

    def test_five_point_sphere_under_torus(self, sig):
        cover = cover_admissible(sig("0;2,2,2,2,2"), 2, sig("1;2,2"))
        assert cover is not None
        assert cover.branch_data == (BranchDatum(2, (1,)),) * 4 + (BranchDatum(2, (2, 2)),)

    def test_euler_mismatch_is_absent(self, sig):
        assert cover_admissible(sig("0;2,2,2,2,2,2"), 2, sig("1;2,2")) is None

    def test_covers_of_six_point_sphere(self, sig):
        totals = {c.total for c in enumerate_covers(sig("0;2,2,2,2,2,2"), 2)}
        assert totals == {sig("2;"), sig("1;2,2,2,2"), sig("0;2,2,2,2,2,2,2,2")}

    def test_covers_of_torus(self, sig):
        covers = {c.total: c for c in enumerate_covers(sig("1;2,2"), 2)}
        assert covers[sig("2;")].branch_data == (BranchDatum(2, (1,)), BranchDatum(2, (1,)))

    def test_unramified_double_cover(self, sig):
        assert [c.total for c in enumerate_covers(sig("3;"), 2)] == [sig("5;")]

    def test_klein_quartic_edge(self, sig):
        cover = cover_admissible(sig("0;2,3,7"), 24, sig("0;7,7,7"))
        assert cover is not None
        assert cover.preimage_count == 26

    def test_rejects_degree_one(self, sig):
        with pytest.raises(ValueError):
            enumerate_covers(sig("2;"), 1)
        with pytest.raises(ValueError):
            cover_admissible(sig("2;"), 1, sig("2;"))

    @pytest.mark.parametrize(
        "text, degree",
        [("0;2,2,2,2,2,2", 2), ("0;2,2,2,3", 2), ("0;2,3,7", 24), ("0;2,4,5", 6), ("1;2,2", 3), ("0;3,3,4", 4)],
    )
    def test_identities_hold_for_every_cover(self, sig, text, degree):
        for cover in enumerate_covers(sig(text), degree):
            assert orbifold_euler(cover.total) == degree * orbifold_euler(cover.base)
            lhs, rhs = cover.euler_identity()
            assert lhs == rhs
            upstairs, downstairs = cover.ramification_identity()
            assert upstairs == downstairs
            assert l_sum(cover.total) >= 0

    def test_deterministic(self, sig):
        assert enumerate_covers(sig("0;2,3,7"), 8) == enumerate_covers(sig("0;2,3,7"), 8)
