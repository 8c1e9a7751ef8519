"""Discriminant inequalities for genus one fibrations.

Conventions: ``n`` is the fiber degree of ``D``, ``d = chi(O_Y) = deg omega``,
``g`` the genus of the base, ``delta = deg R^1 f_* O_Y(-D)``.  Everything is
exact integer or ``Fraction`` arithmetic.  The characteristic-zero forms of
the bounds are computed; the characteristic hypothesis is only recorded.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction

from .atiyah import e_invariant

__all__ = [
    "FibrationInvariants",
    "DiscriminantData",
    "Thresholds",
    "d_squared_from_delta",
    "delta_from_d_squared",
    "discriminant",
    "cthm1_bound",
    "gamma_bound",
    "euler_char_end",
    "universal_extension",
    "slope_gap_from_cthm1",
    "d2_thresholds",
]


def d_squared_from_delta(n: int, d: int, delta: int) -> int:
    return -2 * delta - (n + 2) * d


def delta_from_d_squared(n: int, d: int, d_squared: int) -> int:
    twice = -d_squared - (n + 2) * d
    if twice % 2:
        raise ValueError(f"D^2={d_squared} has the wrong parity for n={n}, d={d}")
    return twice // 2


@dataclass(frozen=True)
class FibrationInvariants:
    """``(n, d, g, delta, D^2)`` tied together by ``D^2 = -2 delta - (n+2) d``."""

    n: int
    d: int
    g: int
    delta: int
    d_squared: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1 or self.g < 0:
            raise ValueError("need n >= 1, d >= 1, g >= 0")
        if self.d_squared != d_squared_from_delta(self.n, self.d, self.delta):
            raise ValueError("D^2 != -2 delta - (n+2) d")

    @classmethod
    def from_delta(cls, n: int, d: int, delta: int, g: int = 0) -> "FibrationInvariants":
        return cls(n, d, g, delta, d_squared_from_delta(n, d, delta))

    @classmethod
    def from_d_squared(cls, n: int, d: int, d_squared: int, g: int = 0) -> "FibrationInvariants":
        return cls(n, d, g, delta_from_d_squared(n, d, d_squared), d_squared)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.delta, self.n)

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "g": self.g, "delta": self.delta, "d2": self.d_squared}

    @classmethod
    def from_dict(cls, data: dict) -> "FibrationInvariants":
        return cls(data["n"], data["d"], data["g"], data["delta"], data["d2"])


@dataclass(frozen=True)
class DiscriminantData:
    r: int
    c1_sq: int
    c2: int
    fiber_degree: int = 0

    @property
    def Delta(self) -> int:
        return discriminant(self)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["Delta"] = self.Delta
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "DiscriminantData":
        return cls(data["r"], data["c1_sq"], data["c2"], data.get("fiber_degree", 0))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def discriminant(D: DiscriminantData) -> int:
    """``Delta = 2 r c_2 - (r - 1) c_1^2``."""
    if D.r < 1:
        raise ValueError("rank must be positive")
    return 2 * D.r * D.c2 - (D.r - 1) * D.c1_sq


def cthm1_bound(r: int, n_deg: int, d: int, over_p1: bool = False) -> int:
    """Lower bound on ``Delta(V)`` for ``V`` stable on the generic fiber.

    ``(r^2 - e) d`` with ``e = gcd(n_deg, r)``, plus ``2(e - 1)`` over P^1.
    """
    if r < 1 or d < 1:
        raise ValueError("need r >= 1 and d >= 1")
    e = e_invariant(n_deg, r)
    bound = (r * r - e) * d
    if over_p1:
        bound += 2 * (e - 1)
    return bound


def gamma_bound(e: int, g: int = 0, over_p1: bool = False) -> int:
    """Upper bound on the degree of ``g_* O_C`` for a degree-e spectral cover."""
    if e < 1:
        raise ValueError("e must be positive")
    if over_p1:
        if g != 0:
            raise ValueError("over_p1 requires base genus g = 0")
        return -(e - 1)
    return 0


def euler_char_end(r: int, e: int, d: int, gamma: int, torsion_length: int = 0) -> int:
    """``chi(Y; End V)`` computed through the Leray spectral sequence.

    Equals ``2 gamma - t + e d`` with ``t`` the torsion length; comparing with
    ``-Delta + r^2 d`` gives ``Delta = (r^2 - e) d - 2 gamma + t``.
    """
    if torsion_length < 0:
        raise ValueError("torsion length is nonnegative")
    return 2 * gamma - torsion_length + e * d


def universal_extension(n: int, r: int, delta_w: int, delta: int, d: int) -> DiscriminantData:
    """Chern data of the extension ``0 -> O(-D) -> V -> f^* W -> 0``.

    ``W`` has rank ``r`` and degree ``delta_w``.  ``V`` has rank ``r + 1``,
    fiber degree ``-n``, ``c_1^2 = D^2 - 2 n delta_w`` and ``c_2 = -n delta_w``.
    """
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    d2 = d_squared_from_delta(n, d, delta)
    data = DiscriminantData(r=r + 1, c1_sq=d2 - 2 * n * delta_w, c2=-n * delta_w, fiber_degree=-n)
    closed_form = -2 * n * delta_w + 2 * r * delta + r * (n + 2) * d
    assert discriminant(data) == closed_form
    return data


def slope_gap_from_cthm1(n: int, r: int, d: int, over_p1: bool = True) -> Fraction:
    """Bound on ``mu(W) - mu`` obtained by feeding the universal extension to the Delta bound.

    ``Delta(V)`` is affine in ``delta_w`` for fixed ``delta``; both
    coefficients are read off ``universal_extension`` and the inequality
    ``Delta(V) >= cthm1_bound(r+1, -n, d)`` is solved for ``delta_w / r - delta / n``.
    """
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    if d < 1:
        raise ValueError("d must be >= 1")
    delta = 0
    base = discriminant(universal_extension(n, r, 0, delta, d))
    step = discriminant(universal_extension(n, r, 1, delta, d)) - base
    # step < 0:  Delta >= B  <=>  delta_w <= (B - base) / step
    lower = cthm1_bound(r + 1, -n, d, over_p1)
    max_delta_w = Fraction(lower - base, step)
    return max_delta_w / r - Fraction(delta, n)


@dataclass(frozen=True)
class Thresholds:
    """Largest ``D^2`` at which ``h^1(D) != 0`` / a base point of ``|D|`` can occur."""

    n: int
    d: int
    g: int
    h1_bound: int
    basepoint_bound: int
    char_assumption: str = "char k does not divide n"

    def to_dict(self) -> dict:
        return asdict(self)


def d2_thresholds(n: int, d: int, g: int = 0) -> Thresholds:
    if n < 2 or d < 1 or g < 0:
        raise ValueError("need n >= 2, d >= 1, g >= 0")
    if n % 2:
        h1 = (2 * n - 3) * d + 4 * n * (g - 1)
        bp = h1 + 4
        char = "char k does not divide n"
    elif g == 0:
        h1 = (2 * n - 2) * d - 4 * n - 2
        bp = (2 * n - 2) * d - 4 * n + 2
        char = "char k != 2"
    else:
        h1 = (2 * n - 2) * d + 4 * n * (g - 1)
        bp = h1 + 4
        char = "char k != 2"
    return Thresholds(n, d, g, h1, bp, char)
