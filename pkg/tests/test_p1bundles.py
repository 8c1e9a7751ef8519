import itertools
import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ellfib import p1bundles as pb
from ellfib.p1bundles import SplittingType


def twists(lo=-20, hi=20, min_size=1, max_size=5):
    return st.lists(st.integers(lo, hi), min_size=min_size, max_size=max_size)


class TestSplittingType:
    def test_sorted_on_construction(self):
        assert SplittingType([3, -1, 0]).twists == (-1, 0, 3)

    def test_rank_degree_slope(self):
        S = SplittingType([-3, -1])
        assert (S.rank, S.degree, S.slope) == (2, -4, Fraction(-2))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            SplittingType([])

    def test_from_drops_and_r1(self):
        S = SplittingType.from_drops([1, 2])
        assert S.twists == (-2, -1, 0)
        assert S.r1_from_pushforward(4).twists == (-4, -3, -2)

    def test_descending(self):
        assert SplittingType([2, 0, 1]).descending() == (2, 1, 0)

    @given(twists())
    def test_json_round_trip(self, xs):
        S = SplittingType(xs)
        assert json.loads(S.to_json()) == sorted(xs)
        assert SplittingType.from_json(S.to_json()) == S

    def test_from_json_rejects_objects(self):
        with pytest.raises(ValueError):
            SplittingType.from_json('{"a": 1}')

    @given(twists(max_size=3), twists(max_size=3))
    def test_tensor_and_sum(self, xs, ys):
        S, T = SplittingType(xs), SplittingType(ys)
        assert S.tensor(T).twists == tuple(sorted(a + b for a in xs for b in ys))
        assert S.direct_sum(T).degree == S.degree + T.degree
        assert S.dual().dual() == S


class TestCohomology:
    def test_known_values(self):
        assert pb.cohomology([0, -1]) == (1, 0, 1)
        assert pb.cohomology([-3], 0) == (0, 2, -2)
        assert pb.cohomology([2, -4], 1) == (4, 2, 2)

    @given(twists(), st.integers(-20, 20))
    def test_against_monomial_count(self, xs, t):
        c = pb.cohomology(xs, t)
        assert (c.h0, c.h1) == (oracles.h0(xs, t), oracles.h1(xs, t))
        assert c.chi == sum(a + t + 1 for a in xs) == c.h0 - c.h1

    @given(twists(-10, 10), st.integers(-10, 10))
    def test_serre_duality_shape(self, xs, t):
        S = SplittingType(xs)
        assert pb.cohomology(S, t).h1 == pb.cohomology(S.dual(), -t - 2).h0


class TestSymPower:
    def test_sym2(self):
        assert pb.sym_power([0, -1], 2).twists == (-2, -1, 0)
        assert pb.sym_power([0, -1, -2], 2).twists == (-4, -3, -2, -2, -1, 0)

    def test_sym0_and_negative(self):
        assert pb.sym_power([5, 7], 0).twists == (0,)
        with pytest.raises(ValueError):
            pb.sym_power([1], -1)

    @settings(max_examples=60)
    @given(twists(-6, 6, max_size=4), st.integers(1, 4))
    def test_against_monomials(self, xs, k):
        n = len(xs)
        sym = pb.sym_power(xs, k)
        assert list(sym.twists) == oracles.sym_power(xs, k)
        assert sym.rank == math.comb(n + k - 1, k)
        assert Fraction(sym.degree) == Fraction(k, n) * math.comb(n + k - 1, k) * sum(xs)


class TestRigid:
    def test_examples(self):
        assert pb.is_rigid([-1, -1, 0])
        assert not pb.is_rigid([-2, 0])

    def test_cohomological_characterisation(self):
        # twist so that h0 > 0 and h0(-1) = 0; rigid iff h1 vanishes there
        for n in range(1, 5):
            for xs in itertools.combinations_with_replacement(range(-5, 6), n):
                S = SplittingType(xs).twist(-max(xs))
                assert pb.cohomology(S, 0).h0 > 0 and pb.cohomology(S, -1).h0 == 0
                assert pb.is_rigid(xs) == (pb.cohomology(S, 0).h1 == 0)


class TestSlopeGaps:
    @given(twists(min_size=2))
    def test_gap_is_max_over_subsets(self, xs):
        n = len(xs)
        mu = oracles.slope(xs)
        for r in range(1, n):
            subs = [oracles.slope(c) for c in itertools.combinations(xs, r)]
            assert pb.subbundle_slope_gap(xs, r) == max(subs) - mu
            assert pb.quotient_slope_gap(xs, r) == mu - min(subs)

    @given(twists(min_size=2))
    def test_gap_nonnegative(self, xs):
        S = SplittingType(xs)
        for r in range(1, S.rank):
            g = pb.subbundle_slope_gap(S, r)
            assert g >= 0
            assert (g == 0) == (Fraction(sum(S.twists[-r:]), r) == S.slope)

    def test_rank_range(self):
        with pytest.raises(ValueError):
            pb.subbundle_slope_gap([1, 2], 2)
        with pytest.raises(ValueError):
            pb.quotient_slope_gap([1], 1)


class TestBounds:
    def test_order_two(self):
        assert pb.admissibility_bound(2, 1, 5) == Fraction(4, 2)
        assert pb.admissibility_bound(2, 1, 5, over_p1=False) == Fraction(5, 2)

    def test_order_three(self):
        d = 7
        assert pb.admissibility_bound(3, 1, d) == Fraction(d, 3)
        assert pb.admissibility_bound(3, 2, d) == Fraction(d - 1, 3)

    @given(st.integers(2, 9), st.integers(1, 12), st.booleans())
    def test_quot_is_sub_of_complementary_rank(self, n, d, p1):
        # mu - mu(Q) for rank r quotients has the same shape as the rank n - r sub case scaled
        for r in range(1, n):
            q = pb.admissibility_bound(n, r, d, "quot", p1)
            s = pb.admissibility_bound(n, n - r, d, "sub", p1)
            assert q * r == s * (n - r)

    def test_bad_side(self):
        with pytest.raises(ValueError):
            pb.admissibility_bound(3, 1, 2, side="left")

    def test_remark_values(self):
        rb = pb.remark_bounds([-3, -3], 3)
        assert rb.top_gap_ok and rb.bottom_gap_ok
        # (nd/2 - 1 + (n-1)(d-1)) / n at n = 2, d = 3
        assert rb.total_gap_bound == Fraction(2)
        assert pb.remark_bounds([-3, -2, -1], 3).total_gap_bound == Fraction(3 + 4, 3)

    @given(st.integers(2, 8), st.integers(1, 12))
    def test_sharp_gap_never_exceeds_coarse(self, n, d):
        rb = pb.remark_bounds([0] * n, d)
        assert rb.total_gap_bound <= pb.coarse_gap_bound(d)


class TestAdmissibility:
    def test_known_member(self):
        assert pb.is_admissible([-3, -1], 3)
        assert not pb.is_admissible([-5, 0], 3)

    def test_violation_names(self):
        names = pb.admissibility_violations([-5, 0], 3)
        assert "P1 subbundle slope bound (r=1)" in names
        assert "rank-one top gap bound" in names

    def test_rank_one_rejected(self):
        with pytest.raises(ValueError):
            pb.is_admissible([0], 3)

    @settings(max_examples=200)
    @given(twists(-12, 4, min_size=2, max_size=4), st.integers(1, 8))
    def test_against_subset_oracle(self, xs, d):
        assert pb.is_admissible(xs, d) == oracles.admissible(xs, d)

    @pytest.mark.parametrize("n,d", [(2, 1), (2, 4), (3, 2), (3, 5), (4, 3), (5, 2)])
    def test_enumeration_matches_oracle(self, n, d):
        for delta in range(-3 * n * d // 2 - n, n + 1):
            found = {S.twists for S in pb.enumerate_admissible(n, d, delta)}
            assert found == oracles.admissible_types(n, d, delta, width=2 * d + 2)

    def test_window_contains_everything(self):
        for n, d in [(2, 3), (3, 4), (4, 2)]:
            for delta in range(-2 * n * d, 1):
                lo, hi = pb.search_window(n, d, delta)
                for t in oracles.admissible_types(n, d, delta, width=3 * d + 3):
                    assert lo <= t[0] and t[-1] <= hi

    def test_frozen_counts(self):
        # counts frozen from the subset oracle
        counts = [len(pb.enumerate_admissible(3, 4, delta)) for delta in range(-12, -5)]
        assert counts == [
            len(oracles.admissible_types(3, 4, delta, width=12)) for delta in range(-12, -5)
        ]
        assert counts == [3, 2, 3, 3, 2, 3, 3]
        assert {S.twists for S in pb.enumerate_admissible(3, 4, -9)} == {
            (-5, -2, -2), (-4, -3, -2), (-3, -3, -3),
        }
