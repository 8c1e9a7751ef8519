"""Even lattices, Pontrjagin squares and reflection orbits.

The lattice of interest is ``Lambda(d) = (2d-2) U + d (-E8)``, the
orthogonal complement of a section and a fiber in ``H^2`` of an elliptic
surface with ``chi(O) = d``.  Classes in ``Lambda / n Lambda`` carry the
Pontrjagin square ``Lambda/n -> Z/2n`` (square any integral lift), which is
well defined because the lattice is even.

Gram matrices are small integer numpy arrays; determinants are computed
exactly with sympy.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, NamedTuple, Sequence

import numpy as np
import sympy

from .chern import FibrationInvariants

__all__ = [
    "EvenLattice",
    "ModClass",
    "Orbit",
    "U_GRAM",
    "E8_CARTAN",
    "E8_HIGHEST_ROOT",
    "hyperbolic_plane",
    "e8",
    "direct_sum",
    "lambda_d",
    "inner",
    "square",
    "pontrjagin",
    "divisibility",
    "is_primitive",
    "wall_representative",
    "reflect",
    "roots",
    "orbit_partition",
    "orbits_to_tsv",
    "component_count",
    "component_label",
    "wall_levels",
    "asd_congruence",
    "ORBIT_BUDGET",
    "ORBIT_WORK_BUDGET",
    "ROOT_SEARCH_BUDGET",
]

ORBIT_BUDGET = 2**20
# classes x distinct reflections held in the image table
ORBIT_WORK_BUDGET = 2**26
# candidate vectors scanned by roots()
ROOT_SEARCH_BUDGET = 2**22

U_GRAM = np.array([[0, 1], [1, 0]], dtype=np.int64)

# Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
_E8_EDGES = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
E8_CARTAN = 2 * np.eye(8, dtype=np.int64)
for _i, _j in _E8_EDGES:
    E8_CARTAN[_i, _j] = E8_CARTAN[_j, _i] = -1
E8_CARTAN.setflags(write=False)

E8_HIGHEST_ROOT = np.array([2, 3, 4, 6, 5, 4, 3, 2], dtype=np.int64)


class EvenLattice:
    """A lattice given by an integral symmetric Gram matrix with even diagonal.

    ``hyperbolic`` lists index pairs ``(i, j)`` spanning designated copies of
    ``U`` (basis ``epsilon = e_i``, ``delta = e_j``) that are orthogonal
    direct summands.
    """

    def __init__(self, gram, hyperbolic: Sequence[tuple[int, int]] | None = None):
        G = np.array(gram, dtype=np.int64)
        if G.ndim != 2 or G.shape[0] != G.shape[1]:
            raise ValueError("Gram matrix must be square")
        if not np.array_equal(G, G.T):
            raise ValueError("Gram matrix must be symmetric")
        if np.any(np.diag(G) % 2):
            raise ValueError("lattice is not even: odd diagonal entry")
        G.setflags(write=False)
        self.gram = G
        if hyperbolic is None:
            hyperbolic = _find_hyperbolic_summands(G)
        else:
            for i, j in hyperbolic:
                if not _is_hyperbolic_summand(G, i, j):
                    raise ValueError(f"indices ({i}, {j}) do not span a hyperbolic summand")
        self.hyperbolic = tuple((int(i), int(j)) for i, j in hyperbolic)

    @property
    def rank(self) -> int:
        return self.gram.shape[0]

    def det(self) -> int:
        return int(sympy.Matrix(self.gram.tolist()).det(method="bareiss"))

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def to_json(self) -> str:
        return json.dumps(self.gram.tolist())

    @classmethod
    def from_json(cls, text: str) -> "EvenLattice":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            raise ValueError("Gram JSON must be an array of arrays")
        return cls(data)

    def __eq__(self, other) -> bool:
        return isinstance(other, EvenLattice) and np.array_equal(self.gram, other.gram)

    def __hash__(self) -> int:
        return hash(self.gram.tobytes())

    def __repr__(self) -> str:
        return f"EvenLattice(rank={self.rank}, hyperbolic={len(self.hyperbolic)})"


def _is_hyperbolic_summand(G: np.ndarray, i: int, j: int) -> bool:
    if i == j or G[i, i] or G[j, j] or G[i, j] != 1:
        return False
    others = [k for k in range(G.shape[0]) if k not in (i, j)]
    return not G[np.ix_([i, j], others)].any()


def _find_hyperbolic_summands(G: np.ndarray) -> list[tuple[int, int]]:
    found, used = [], set()
    for i in range(G.shape[0] - 1):
        j = i + 1
        if i in used or j in used:
            continue
        if _is_hyperbolic_summand(G, i, j):
            found.append((i, j))
            used.update((i, j))
    return found


def direct_sum(*grams) -> np.ndarray:
    blocks = [np.asarray(g.gram if isinstance(g, EvenLattice) else g, dtype=np.int64) for g in grams]
    size = sum(b.shape[0] for b in blocks)
    out = np.zeros((size, size), dtype=np.int64)
    k = 0
    for b in blocks:
        m = b.shape[0]
        out[k:k + m, k:k + m] = b
        k += m
    return out


def hyperbolic_plane(copies: int = 1) -> EvenLattice:
    return EvenLattice(direct_sum(*[U_GRAM] * copies), [(2 * c, 2 * c + 1) for c in range(copies)])


def e8(negative: bool = True) -> EvenLattice:
    return EvenLattice(-E8_CARTAN if negative else E8_CARTAN, [])


def lambda_d(d: int) -> EvenLattice:
    """``(2d-2) U + d (-E8)``: even, unimodular, rank ``12d - 4``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    u = 2 * d - 2
    G = direct_sum(*([U_GRAM] * u + [-E8_CARTAN] * d))
    L = EvenLattice(G, [(2 * c, 2 * c + 1) for c in range(u)])
    assert L.rank == 12 * d - 4
    return L


def _vec(L: EvenLattice, v) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (L.rank,):
        raise ValueError(f"vector of length {v.shape} does not match lattice rank {L.rank}")
    return v


def inner(L: EvenLattice, v, w) -> int:
    return int(_vec(L, v) @ L.gram @ _vec(L, w))


def square(L: EvenLattice, v) -> int:
    return inner(L, v, v)


@dataclass(frozen=True)
class ModClass:
    """A class in ``Lambda / n Lambda``; coordinates reduced into ``[0, n)``."""

    n: int
    coords: tuple[int, ...]

    def __init__(self, n: int, coords: Iterable[int]):
        if n < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "coords", tuple(int(c) % n for c in coords))

    def lift(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)


def pontrjagin(L: EvenLattice, a: ModClass) -> int:
    """Square of an integral lift of ``a``, reduced mod ``2n``."""
    if np.any(np.diag(L.gram) % 2):
        raise ValueError("Pontrjagin square needs an even lattice")
    return square(L, a.lift()) % (2 * a.n)


def divisibility(a: ModClass) -> int:
    """Largest divisor ``n'`` of ``n`` with ``a = n' a'``."""
    return reduce(math.gcd, a.coords, a.n)


def is_primitive(a: ModClass) -> bool:
    return divisibility(a) == 1


def wall_representative(L: EvenLattice, j: int, summand: int = 0) -> np.ndarray:
    """``epsilon + (j/2) delta`` inside the designated hyperbolic summand."""
    if j % 2:
        raise ValueError(f"j={j} must be even")
    if not L.hyperbolic:
        raise ValueError("lattice has no designated hyperbolic summand")
    i_eps, i_del = L.hyperbolic[summand]
    v = np.zeros(L.rank, dtype=np.int64)
    v[i_eps] = 1
    v[i_del] = j // 2
    return v


def reflect(L: EvenLattice, v, x) -> np.ndarray:
    """Reflection of ``x`` in the root ``v`` (``v.v = +-2``)."""
    v, x = _vec(L, v), _vec(L, x)
    vv = square(L, v)
    if vv not in (2, -2):
        raise ValueError(f"reflection needs v.v = +-2, got {vv}")
    return x - (2 * inner(L, x, v) // vv) * v


def roots(L: EvenLattice, root_bound: int) -> np.ndarray:
    """Roots ``v.v = +-2`` with coordinates in ``[-root_bound, root_bound]``, one per +-v pair."""
    if root_bound < 1:
        raise ValueError("root_bound must be positive")
    candidates = (2 * root_bound + 1) ** L.rank
    if candidates > ROOT_SEARCH_BUDGET:
        raise ValueError(f"{candidates} candidate roots exceeds the search budget {ROOT_SEARCH_BUDGET}")
    rng = range(-root_bound, root_bound + 1)
    out = []
    for v in itertools.product(rng, repeat=L.rank):
        # keep the representative whose first nonzero coordinate is positive
        nz = next((c for c in v if c), 0)
        if nz <= 0:
            continue
        vec = np.array(v, dtype=np.int64)
        if abs(int(vec @ L.gram @ vec)) == 2:
            out.append(vec)
    return np.array(out, dtype=np.int64).reshape(-1, L.rank)


class Orbit(NamedTuple):
    classes: list[tuple[int, ...]]
    divisibility: int
    pontrjagin: int


def _all_classes(rank: int, n: int) -> np.ndarray:
    grids = np.indices((n,) * rank).reshape(rank, -1).T
    return grids.astype(np.int64)


def _distinct_mod(L: EvenLattice, R: np.ndarray, n: int) -> np.ndarray:
    # roots inducing the same reflection of L/nL: same +-v mod n and same sign of v.v
    keep, seen = [], set()
    for v in R:
        a, b = tuple(v % n), tuple(-v % n)
        key = (min(a, b), int(v @ L.gram @ v))
        if key not in seen:
            seen.add(key)
            keep.append(v)
    return np.array(keep, dtype=np.int64).reshape(-1, L.rank)


def orbit_partition(L: EvenLattice, n: int, root_bound: int, budget: int = ORBIT_BUDGET) -> list[Orbit]:
    """Orbits of primitive classes mod ``n`` under reflections in bounded roots.

    Breadth-first search over ``Lambda / n Lambda``; orbits are returned in
    order of their smallest class, each labelled by divisibility and
    Pontrjagin square.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    total = n ** L.rank
    if total > budget:
        raise ValueError(f"{n}^{L.rank} = {total} classes exceeds the budget {budget}")
    if n == 1:
        zero = ModClass(1, [0] * L.rank)
        return [Orbit([zero.coords], 1, pontrjagin(L, zero))]
    R = roots(L, root_bound)
    if len(R) == 0:
        raise ValueError("no roots within the given coordinate bound")
    R = _distinct_mod(L, R, n)
    if total * len(R) > ORBIT_WORK_BUDGET:
        raise ValueError(
            f"{total} classes x {len(R)} reflections exceeds the work budget {ORBIT_WORK_BUDGET}"
        )

    X = _all_classes(L.rank, n)
    weights = n ** np.arange(L.rank - 1, -1, -1, dtype=np.int64)
    # images[k, idx]: index of reflection k applied to class idx
    pair = X @ L.gram @ R.T
    signs = 2 // np.einsum("ki,ij,kj->k", R, L.gram, R)
    images = np.empty((len(R), total), dtype=np.int64)
    for k, v in enumerate(R):
        Y = (X - (signs[k] * pair[:, k])[:, None] * v[None, :]) % n
        images[k] = Y @ weights

    div = np.gcd.reduce(np.concatenate([X, np.full((total, 1), n)], axis=1), axis=1)
    sq = np.einsum("ij,jk,ik->i", X, L.gram, X) % (2 * n)
    label = np.full(total, -1, dtype=np.int64)
    orbits = []
    for start in np.flatnonzero(div == 1):
        if label[start] >= 0:
            continue
        oid = len(orbits)
        label[start] = oid
        frontier = np.array([start])
        members = [frontier]
        while frontier.size:
            nxt = np.unique(images[:, frontier])
            nxt = nxt[label[nxt] < 0]
            label[nxt] = oid
            members.append(nxt)
            frontier = nxt
        idx = np.sort(np.concatenate(members))
        orbits.append(Orbit([tuple(int(c) for c in X[i]) for i in idx], int(div[start]), int(sq[start])))
    return orbits


def orbits_to_tsv(orbits: Sequence[Orbit]) -> str:
    lines = ["coords\tdivisibility\tpontrjagin\torbit_id"]
    for oid, orb in enumerate(orbits):
        for c in orb.classes:
            lines.append(f"{','.join(map(str, c))}\t{orb.divisibility}\t{orb.pontrjagin}\t{oid}")
    return "\n".join(lines) + "\n"


def component_count(d: int, n: int) -> int:
    """Number of moduli components of primitive classes: one per even residue mod ``2n``."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    return n


def component_label(L: EvenLattice, a: ModClass) -> int:
    """Pontrjagin level indexing the component of a primitive class."""
    k = divisibility(a)
    if k != 1:
        raise ValueError(f"class has divisibility {k}: out of classified range (primitive only)")
    return pontrjagin(L, a)


def wall_levels(d: int, n: int) -> set[int]:
    """Distinct Pontrjagin values of the primitive classes ``epsilon + (j/2) delta`` mod ``n``."""
    L = lambda_d(d)
    levels = set()
    for j in range(0, 2 * n, 2):
        a = ModClass(n, wall_representative(L, j))
        if is_primitive(a):
            levels.add(pontrjagin(L, a))
    return levels


def asd_congruence(F: FibrationInvariants) -> int:
    """``D^2 + n^2 d mod 2n``, the Pontrjagin square of the class of ``(Y, D)``."""
    p = (F.d_squared + F.n * F.n * F.d) % (2 * F.n)
    if p % 2:
        raise ValueError(f"odd Pontrjagin square {p}: inconsistent invariants {F}")
    return p
