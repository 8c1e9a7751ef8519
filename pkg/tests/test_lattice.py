import json
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from ellfib import lattice as lat
from ellfib.chern import FibrationInvariants
from ellfib.lattice import EvenLattice, ModClass

UU = lat.hyperbolic_plane(2)


class TestConstruction:
    def test_e8(self):
        E = lat.e8(negative=False)
        assert E.det() == 1 and E.rank == 8
        h = lat.E8_HIGHEST_ROOT
        assert int(h @ E.gram @ h) == 2
        # the highest root is dominant
        assert np.all(E.gram @ h >= 0)
        assert lat.e8().det() == 1

    def test_e8_cartan_read_only(self):
        with pytest.raises(ValueError):
            lat.E8_CARTAN[0, 0] = 5

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_lambda_d(self, d):
        L = lat.lambda_d(d)
        assert L.rank == 12 * d - 4
        assert L.is_unimodular()
        assert len(L.hyperbolic) == 2 * d - 2
        # float determinant as an independent check
        assert round(abs(np.linalg.det(L.gram.astype(float)))) == 1

    def test_lambda_signature(self):
        ev = np.linalg.eigvalsh(lat.lambda_d(2).gram.astype(float))
        assert (ev > 0).sum() == 2 and (ev < 0).sum() == 18

    def test_rejects_bad_gram(self):
        with pytest.raises(ValueError):
            EvenLattice([[1, 0], [0, 2]])
        with pytest.raises(ValueError):
            EvenLattice([[0, 1], [2, 0]])
        with pytest.raises(ValueError):
            EvenLattice([[0, 1, 0]])
        with pytest.raises(ValueError):
            EvenLattice([[2, 1], [1, 2]], hyperbolic=[(0, 1)])

    def test_detects_hyperbolic_summands(self):
        L = EvenLattice(lat.direct_sum(lat.U_GRAM, lat.U_GRAM))
        assert L.hyperbolic == ((0, 1), (2, 3))

    def test_json_round_trip(self):
        L = lat.lambda_d(2)
        assert json.loads(L.to_json()) == L.gram.tolist()
        assert EvenLattice.from_json(L.to_json()) == L
        with pytest.raises(ValueError):
            EvenLattice.from_json('{"gram": 1}')


class TestPontrjagin:
    def test_values(self):
        assert lat.pontrjagin(UU, ModClass(3, [1, 1, 0, 0])) == 2
        assert lat.pontrjagin(UU, ModClass(3, [2, 1, 0, 2])) == 4

    def test_lift_independence(self):
        rnd = random.Random(11)
        L = lat.lambda_d(2)
        G = L.gram.tolist()
        for n in (2, 3, 4, 5):
            for _ in range(100):
                a = ModClass(n, [rnd.randrange(n) for _ in range(L.rank)])
                p = lat.pontrjagin(L, a)
                assert p % 2 == 0
                for _ in range(5):
                    lift = [c + n * rnd.randint(-3, 3) for c in a.coords]
                    assert oracles.qform(G, lift) % (2 * n) == p

    def test_divisibility(self):
        assert lat.divisibility(ModClass(6, [2, 4, 0])) == 2
        assert lat.divisibility(ModClass(6, [3, 0])) == 3
        assert lat.is_primitive(ModClass(6, [1, 0]))
        assert lat.divisibility(ModClass(6, [0, 0])) == 6


class TestReflections:
    def test_swap(self):
        x = lat.reflect(UU, [1, -1, 0, 0], [1, 0, 0, 0])
        assert x.tolist() == [0, 1, 0, 0]

    def test_self(self):
        v = np.array([1, 1, 0, 0])
        assert lat.reflect(UU, v, v).tolist() == (-v).tolist()

    def test_rejects_non_root(self):
        with pytest.raises(ValueError):
            lat.reflect(UU, [1, 0, 0, 0], [0, 1, 0, 0])

    @given(st.lists(st.integers(-4, 4), min_size=8, max_size=8), st.randoms(use_true_random=False))
    def test_isometry(self, xy, rnd):
        R = lat.roots(UU, 1)
        v = R[rnd.randrange(len(R))]
        x, y = np.array(xy[:4]), np.array(xy[4:])
        rx, ry = lat.reflect(UU, v, x), lat.reflect(UU, v, y)
        assert lat.inner(UU, rx, ry) == lat.inner(UU, x, y)
        assert lat.reflect(UU, v, rx).tolist() == x.tolist()

    def test_roots_one_per_pair(self):
        R = lat.roots(UU, 1)
        keys = {tuple(v) for v in R}
        assert not any(tuple(-v) in keys for v in R)
        assert all(abs(lat.square(UU, v)) == 2 for v in R)

    def test_wall_representative(self):
        L = lat.lambda_d(2)
        for j in range(-6, 8, 2):
            assert lat.square(L, lat.wall_representative(L, j)) == j
        with pytest.raises(ValueError):
            lat.wall_representative(L, 3)
        with pytest.raises(ValueError):
            lat.wall_representative(lat.e8(), 0)


def partition_of(orbits):
    return sorted(sorted(o.classes) for o in orbits)


class TestOrbits:
    @pytest.mark.parametrize("n", [2, 3])
    def test_matches_union_find(self, n):
        orbits = lat.orbit_partition(UU, n, 2)
        expected = oracles.reflection_orbits(UU.gram.tolist(), n, 2)
        assert partition_of(orbits) == sorted(sorted(o) for o in expected)

    def test_three_copies_match_union_find(self):
        L = lat.hyperbolic_plane(3)
        assert partition_of(lat.orbit_partition(L, 2, 1)) == sorted(
            sorted(o) for o in oracles.reflection_orbits(L.gram.tolist(), 2, 1)
        )

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_labels_constant(self, n):
        for orb in lat.orbit_partition(UU, n, 2):
            for c in orb.classes:
                a = ModClass(n, c)
                assert lat.divisibility(a) == orb.divisibility == 1
                assert lat.pontrjagin(UU, a) == orb.pontrjagin

    def test_single_plane(self):
        U = lat.hyperbolic_plane(1)
        orbits = lat.orbit_partition(U, 2, 1)
        labels = sorted(lat.pontrjagin(U, ModClass(2, c)) for o in orbits for c in o.classes)
        assert labels == [0, 0, 2]

    def test_trivial_modulus(self):
        (orb,) = lat.orbit_partition(UU, 1, 1)
        assert orb.classes == [(0, 0, 0, 0)]

    def test_mod3_levels_transitive(self):
        orbits = lat.orbit_partition(UU, 3, 2)
        assert sorted((o.pontrjagin, len(o.classes)) for o in orbits) == [(0, 32), (2, 24), (4, 24)]

    def test_mod2_transvection_split(self):
        # mod 2 every reflection is a transvection in an odd-norm vector;
        # on U + U these generate a group with two orbits on the norm-2 classes
        orbits = lat.orbit_partition(UU, 2, 3)
        assert sorted((o.pontrjagin, len(o.classes)) for o in orbits) == [(0, 9), (2, 3), (2, 3)]

    def test_mod2_transitive_with_three_planes(self):
        orbits = lat.orbit_partition(lat.hyperbolic_plane(3), 2, 1)
        assert sorted((o.pontrjagin, len(o.classes)) for o in orbits) == [(0, 35), (2, 28)]

    def test_tsv(self):
        text = lat.orbits_to_tsv(lat.orbit_partition(UU, 2, 1))
        lines = text.strip().split("\n")
        assert lines[0] == "coords\tdivisibility\tpontrjagin\torbit_id"
        assert len(lines) == 1 + 15

    def test_budgets(self):
        with pytest.raises(ValueError, match="exceeds the budget"):
            lat.orbit_partition(lat.lambda_d(3), 2, 1)
        with pytest.raises(ValueError, match="search budget"):
            lat.orbit_partition(lat.lambda_d(2), 2, 1)
        with pytest.raises(ValueError):
            lat.orbit_partition(EvenLattice([[-4]]), 2, 1)
        L = EvenLattice(lat.direct_sum(UU, lat.e8()))
        with pytest.raises(ValueError, match="work budget"):
            lat.orbit_partition(L, 3, 1)


class TestComponents:
    @pytest.mark.parametrize("d", range(2, 7))
    def test_count_matches_wall_levels(self, d):
        for n in range(1, 9):
            assert lat.component_count(d, n) == n
            assert lat.wall_levels(d, n) == set(range(0, 2 * n, 2))

    def test_label(self):
        L = lat.lambda_d(2)
        a = ModClass(4, lat.wall_representative(L, 6))
        assert lat.component_label(L, a) == 6
        with pytest.raises(ValueError, match="out of classified range"):
            lat.component_label(L, ModClass(4, 2 * lat.wall_representative(L, 0)))

    def test_rejects(self):
        with pytest.raises(ValueError):
            lat.component_count(1, 3)

    def test_asd(self):
        for n in range(1, 7):
            for d in range(1, 9):
                for delta in range(-30, 31):
                    F = FibrationInvariants.from_delta(n, d, delta)
                    assert (F.d_squared - n * d) % 2 == 0
                    p = lat.asd_congruence(F)
                    assert p % 2 == 0 and p == (F.d_squared + n * n * d) % (2 * n)
