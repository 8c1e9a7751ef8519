"""Split vector bundles on P^1.

A bundle ``O(a_1) + ... + O(a_n)`` is stored as its splitting type, the
ascending tuple of twists.  Cohomology, symmetric powers, rigidity, slope
gaps and the slope bounds for ``R^1 f_* O_Y(-D)`` of a genus one fibration
over P^1 all reduce to exact integer/rational arithmetic on that tuple.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "SplittingType",
    "Cohomology",
    "RemarkBounds",
    "cohomology",
    "sym_power",
    "is_rigid",
    "subbundle_slope_gap",
    "quotient_slope_gap",
    "admissibility_bound",
    "remark_bounds",
    "coarse_gap_bound",
    "admissibility_violations",
    "is_admissible",
    "search_window",
    "enumerate_admissible",
]


@dataclass(frozen=True)
class SplittingType:
    """Ascending twists ``(a_1 <= ... <= a_n)`` of a split bundle on P^1.

    The constructor sorts its input, so every instance is canonical.
    Degree and slope are computed on demand.
    """

    twists: tuple[int, ...]

    def __init__(self, twists: Iterable[int]):
        values = tuple(sorted(int(a) for a in twists))
        if not values:
            raise ValueError("a splitting type needs at least one summand")
        object.__setattr__(self, "twists", values)

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def degree(self) -> int:
        return sum(self.twists)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    def dual(self) -> "SplittingType":
        return SplittingType(-a for a in self.twists)

    def twist(self, t: int) -> "SplittingType":
        return SplittingType(a + t for a in self.twists)

    def tensor(self, other: "SplittingType") -> "SplittingType":
        return SplittingType(a + b for a in self.twists for b in other.twists)

    def direct_sum(self, other: "SplittingType") -> "SplittingType":
        return SplittingType(self.twists + other.twists)

    def descending(self) -> tuple[int, ...]:
        return tuple(reversed(self.twists))

    @classmethod
    def from_drops(cls, drops: Sequence[int]) -> "SplittingType":
        """``O + O(-a_2) + ... + O(-a_n)`` for nonnegative drops."""
        return cls([0] + [-a for a in drops])

    def r1_from_pushforward(self, d: int) -> "SplittingType":
        """Convert ``f_* O_Y(D)`` to ``R^1 f_* O_Y(-D) = (f_* O_Y(D))^dual (-d)``."""
        return self.dual().twist(-d)

    def to_json(self) -> str:
        return json.dumps(list(self.twists))

    @classmethod
    def from_json(cls, text: str) -> "SplittingType":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(a, int) for a in data):
            raise ValueError("splitting type JSON must be an integer array")
        return cls(data)

    def __iter__(self) -> Iterator[int]:
        return iter(self.twists)

    def __len__(self) -> int:
        return len(self.twists)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.twists) + ")"


def _as_type(S) -> SplittingType:
    return S if isinstance(S, SplittingType) else SplittingType(S)


class Cohomology(NamedTuple):
    h0: int
    h1: int
    chi: int


def cohomology(S, t: int = 0) -> Cohomology:
    """Cohomology of ``S(t)`` on P^1, summand by summand."""
    S = _as_type(S)
    h0 = sum(max(a + t + 1, 0) for a in S.twists)
    h1 = sum(max(-a - t - 1, 0) for a in S.twists)
    return Cohomology(h0, h1, h0 - h1)


def sym_power(S, k: int) -> SplittingType:
    """Splitting type of ``Sym^k S``: one summand per degree-k monomial."""
    S = _as_type(S)
    if k < 0:
        raise ValueError("symmetric power needs k >= 0")
    if k == 0:
        return SplittingType([0])
    return SplittingType(
        sum(combo) for combo in itertools.combinations_with_replacement(S.twists, k)
    )


def is_rigid(S) -> bool:
    """True iff ``S`` is ``O(a)^k + O(a-1)^(n-k)`` for some ``a``."""
    S = _as_type(S)
    return S.twists[-1] - S.twists[0] <= 1


def _check_rank(n: int, r: int) -> None:
    if not 1 <= r < n:
        raise ValueError(f"sub/quotient rank r={r} must satisfy 1 <= r < n={n}")


def subbundle_slope_gap(S, r: int) -> Fraction:
    """``mu(W) - mu(S)`` for ``W`` the top-r summands (the maximal-slope rank-r sub)."""
    S = _as_type(S)
    _check_rank(S.rank, r)
    return Fraction(sum(S.twists[-r:]), r) - S.slope


def quotient_slope_gap(S, r: int) -> Fraction:
    """``mu(S) - mu(Q)`` for ``Q`` the bottom-r summands (the minimal-slope rank-r quotient)."""
    S = _as_type(S)
    _check_rank(S.rank, r)
    return S.slope - Fraction(sum(S.twists[:r]), r)


def admissibility_bound(n: int, r: int, d: int, side: str = "sub", over_p1: bool = True) -> Fraction:
    """Upper bound on the rank-r slope gap of ``R^1 f_* O_Y(-D)``.

    ``side="sub"`` bounds ``mu(W) - mu`` with ``e = gcd(r+1, n)``;
    ``side="quot"`` bounds ``mu - mu(Q)`` with ``e = gcd(n-r+1, n)``.
    Over P^1 the bound improves by ``(e-1)/(n r)``.
    """
    _check_rank(n, r)
    if d < 1:
        raise ValueError("d = chi(O_Y) must be >= 1")
    if side == "sub":
        e = math.gcd(r + 1, n)
    elif side == "quot":
        e = math.gcd(n - r + 1, n)
    else:
        raise ValueError(f"side must be 'sub' or 'quot', got {side!r}")
    bound = Fraction((r * (n - r) + (e - 1)) * d, 2 * n * r)
    if over_p1:
        bound -= Fraction(e - 1, n * r)
    return bound


class RemarkBounds(NamedTuple):
    top_gap_ok: bool
    bottom_gap_ok: bool
    total_gap_bound: Fraction


def _top_rhs(n: int, d: int) -> Fraction:
    # rank-one subbundle case, times n
    if n % 2:
        return Fraction((n - 1) * d, 2)
    return Fraction(n * d, 2) - 1


def _bottom_rhs(n: int, d: int) -> int:
    return (n - 1) * (d - 1)


def remark_bounds(S, d: int) -> RemarkBounds:
    """The two rank-one gap inequalities and the bound they give on ``a_n - a_1``.

    ``0 <= n a_n - sum(a) <= (n-1)d/2`` (n odd) or ``nd/2 - 1`` (n even), and
    ``0 <= sum(a) - n a_1 <= (n-1)(d-1)``.
    """
    S = _as_type(S)
    if d < 1:
        raise ValueError("d = chi(O_Y) must be >= 1")
    n, delta = S.rank, S.degree
    top, bottom = _top_rhs(n, d), _bottom_rhs(n, d)
    top_ok = 0 <= n * S.twists[-1] - delta <= top
    bottom_ok = 0 <= delta - n * S.twists[0] <= bottom
    return RemarkBounds(top_ok, bottom_ok, (top + bottom) / n)


def coarse_gap_bound(d: int) -> Fraction:
    """The headline bound ``a_n - a_1 <= 3d/2``."""
    return Fraction(3 * d, 2)


def admissibility_violations(S, d: int) -> list[str]:
    """Names of every slope bound ``S`` violates (empty when admissible)."""
    S = _as_type(S)
    n = S.rank
    failed = []
    for r in range(1, n):
        if subbundle_slope_gap(S, r) > admissibility_bound(n, r, d, "sub", True):
            failed.append(f"P1 subbundle slope bound (r={r})")
        if quotient_slope_gap(S, r) > admissibility_bound(n, r, d, "quot", True):
            failed.append(f"P1 quotient slope bound (r={r})")
    rb = remark_bounds(S, d)
    if not rb.top_gap_ok:
        failed.append("rank-one top gap bound")
    if not rb.bottom_gap_ok:
        failed.append("rank-one bottom gap bound")
    return failed


def is_admissible(S, d: int) -> bool:
    S = _as_type(S)
    if S.rank < 2:
        raise ValueError("admissibility needs rank n >= 2")
    return not admissibility_violations(S, d)


def search_window(n: int, d: int, delta: int) -> tuple[int, int]:
    """Range ``[lo, hi]`` containing every entry of an admissible type.

    Intersection of the box ``ceil(delta/n) -+ n*B`` (B the total gap bound)
    with the tighter box forced by the two rank-one inequalities.
    """
    c = -((-delta) // n)
    B = (_top_rhs(n, d) + _bottom_rhs(n, d)) / n
    nB = math.floor(n * B)
    lo = max(c - nB, math.ceil(Fraction(delta - _bottom_rhs(n, d), n)))
    hi = min(c + nB, math.floor((delta + _top_rhs(n, d)) / n))
    return lo, hi


def _sorted_tuples(n: int, total: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    # nondecreasing n-tuples in [lo, hi] summing to total
    if n == 0:
        if total == 0:
            yield ()
        return
    for a in range(lo, hi + 1):
        rest = total - a
        if rest < a * (n - 1) or rest > hi * (n - 1):
            continue
        for tail in _sorted_tuples(n - 1, rest, a, hi):
            yield (a,) + tail


def enumerate_admissible(n: int, d: int, delta: int) -> list[SplittingType]:
    """Every rank-n splitting type of degree ``delta`` meeting all P^1 slope bounds."""
    if n < 2:
        raise ValueError("enumeration needs n >= 2")
    if d < 1:
        raise ValueError("d = chi(O_Y) must be >= 1")
    lo, hi = search_window(n, d, delta)
    found = []
    for tup in _sorted_tuples(n, delta, lo, hi):
        S = SplittingType(tup)
        if not admissibility_violations(S, d):
            found.append(S)
    return found
