"""Semistable bundles on an elliptic curve, after Atiyah.

A semistable bundle of rank ``r`` and degree ``n`` with ``e = gcd(n, r)``
decomposes as a sum over determinants ``lambda`` of blocks
``V(lambda) = sum_i V_{n0, r0, d_i; lambda}``.  Only the partitions
``(d_i)`` matter for the endomorphism algebra: ``Hom`` between two
indecomposables is zero across different ``lambda`` and has dimension
``min(d_1, d_2)`` within the same ``lambda``.  The determinant bundles
themselves are therefore represented only by their position in the block list.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterator

__all__ = [
    "AtiyahType",
    "RegLemmaReport",
    "e_invariant",
    "end_dimension",
    "is_commutative",
    "atiyah_types",
    "verify_reg_lemma",
    "MAX_EXHAUSTIVE_E",
]

MAX_EXHAUSTIVE_E = 16


def e_invariant(n: int, r: int) -> int:
    """``gcd(|n|, r)``, with ``gcd(0, r) = r``."""
    if r < 1:
        raise ValueError("rank must be positive")
    return math.gcd(abs(n), r)


def _canonical_blocks(blocks) -> tuple[tuple[int, ...], ...]:
    out = []
    for block in blocks:
        parts = tuple(sorted((int(p) for p in block), reverse=True))
        if not parts:
            raise ValueError("each block needs at least one Jordan-Holder length")
        if parts[-1] < 1:
            raise ValueError("Jordan-Holder lengths must be positive")
        out.append(parts)
    if not out:
        raise ValueError("an Atiyah type needs at least one block")
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class AtiyahType:
    """Decomposition data of a semistable bundle on an elliptic curve.

    ``blocks`` holds one partition per distinct determinant; blocks and the
    parts inside each block are stored in a canonical (descending) order.
    """

    blocks: tuple[tuple[int, ...], ...]
    n0: int = 0
    r0: int = 1

    def __init__(self, blocks, n0: int = 0, r0: int = 1):
        if r0 < 1:
            raise ValueError("r0 must be positive")
        if math.gcd(abs(n0), r0) != 1:
            raise ValueError(f"gcd(|n0|, r0) must be 1, got n0={n0}, r0={r0}")
        object.__setattr__(self, "blocks", _canonical_blocks(blocks))
        object.__setattr__(self, "n0", n0)
        object.__setattr__(self, "r0", r0)

    @property
    def e(self) -> int:
        return sum(sum(block) for block in self.blocks)

    @property
    def rank(self) -> int:
        return self.e * self.r0

    @property
    def degree(self) -> int:
        return self.e * self.n0

    def to_json(self) -> str:
        return json.dumps([list(b) for b in self.blocks])

    @classmethod
    def from_json(cls, text: str, n0: int = 0, r0: int = 1) -> "AtiyahType":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
            raise ValueError("Atiyah type JSON must be a list of integer lists")
        return cls(data, n0=n0, r0=r0)


def _block_end_dimension(parts) -> int:
    return sum(min(a, b) for a in parts for b in parts)


def end_dimension(T: AtiyahType) -> int:
    """``dim End V``: sum over blocks of ``min(d_i, d_j)`` over ordered pairs."""
    return sum(_block_end_dimension(block) for block in T.blocks)


def is_commutative(T: AtiyahType) -> bool:
    """``End V`` is commutative iff every block is a single indecomposable."""
    return all(len(block) == 1 for block in T.blocks)


def _partitions(m: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def _block_multisets(e: int, bound=None) -> Iterator[tuple[tuple[int, ...], ...]]:
    # multisets of nonempty partitions with total size e, blocks in descending order
    if e == 0:
        yield ()
        return
    for size in range(e, 0, -1):
        for block in _partitions(size):
            if bound is not None and block > bound:
                continue
            for rest in _block_multisets(e - size, block):
                yield (block,) + rest


def atiyah_types(e: int) -> Iterator[AtiyahType]:
    """All decomposition types with total multiplicity ``e``, each exactly once."""
    if e < 1:
        raise ValueError("e must be positive")
    for blocks in _block_multisets(e):
        yield AtiyahType(blocks)


@dataclass
class RegLemmaReport:
    e: int
    checked: int = 0
    commutative: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_reg_lemma(e: int, cap: int = MAX_EXHAUSTIVE_E) -> RegLemmaReport:
    """Check ``dim End >= e`` with equality iff commutative, over all types of size ``e``."""
    if e > cap:
        raise ValueError(f"e={e} exceeds the exhaustion cap {cap}")
    report = RegLemmaReport(e)
    for T in atiyah_types(e):
        dim = end_dimension(T)
        comm = is_commutative(T)
        report.checked += 1
        report.commutative += comm
        if dim < e or (dim == e) != comm:
            report.counterexamples.append((T, dim, comm))
    return report
