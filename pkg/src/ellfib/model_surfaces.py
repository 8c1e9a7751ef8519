"""Intersection numbers on the model spaces of low-order genus one fibrations.

``ProjBundleSpace(drops)`` is the projective bundle over P^1 with
``phi_* O(xi) = O + O(-a_2) + ... + O(-a_n)``; its Chow ring is generated by
the tautological class ``xi`` and the fiber class ``P`` with
``P^2 = 0``, ``xi^(n-1) P = 1`` and ``xi^n = -(a_2 + ... + a_n)``.  For
``n = 2`` this is the Hirzebruch surface ``F_a`` with ``xi`` the negative
section.  The sign convention is the one where ``phi_* O(1)`` has
nonpositive twists; it is pinned by the rank-3 value
``Sigma_1^2 (3 Sigma_1 + N P) = -2a - 2b + d``.

The ring relation is only worked out by hand for ``n = 2, 3``; higher ranks
use the same formula by extrapolation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .p1bundles import Cohomology, SplittingType, cohomology, sym_power

__all__ = [
    "ProjBundleSpace",
    "SurfaceClass",
    "CoverNumerology",
    "RationalSurfaceDivisor",
    "hirzebruch",
    "intersect",
    "relative_canonical",
    "sigma0_incidence",
    "leray_cohomology",
    "base_locus_empty",
    "double_cover",
    "triple_cover",
    "hirzebruch_square",
    "rational_surface_divisor",
    "numerology_table",
]


@dataclass(frozen=True)
class ProjBundleSpace:
    drops: tuple[int, ...]

    def __init__(self, drops: Sequence[int]):
        values = tuple(sorted(int(a) for a in drops))
        if not values:
            raise ValueError("need at least one drop (rank n >= 2)")
        if values[0] < 0:
            raise ValueError("drops must be nonnegative")
        object.__setattr__(self, "drops", values)

    @property
    def n(self) -> int:
        return len(self.drops) + 1

    @property
    def dim(self) -> int:
        return self.n

    @property
    def top_self_intersection(self) -> int:
        return -sum(self.drops)

    def pushforward(self) -> SplittingType:
        """``phi_* O(xi)`` as a splitting type."""
        return SplittingType.from_drops(self.drops)

    def xi(self) -> "SurfaceClass":
        return SurfaceClass(self, 1, 0)

    def fiber(self) -> "SurfaceClass":
        return SurfaceClass(self, 0, 1)

    def cls(self, x: int, y: int) -> "SurfaceClass":
        return SurfaceClass(self, x, y)

    def to_json(self) -> str:
        return json.dumps({"drops": list(self.drops)})

    @classmethod
    def from_json(cls, text: str) -> "ProjBundleSpace":
        return cls(json.loads(text)["drops"])


def hirzebruch(a: int) -> ProjBundleSpace:
    """``F_a`` with ``xi = sigma_0`` (``sigma_0^2 = -a``) and ``P = f``."""
    return ProjBundleSpace([a])


@dataclass(frozen=True)
class SurfaceClass:
    """The divisor class ``x xi + y P``."""

    space: ProjBundleSpace
    x: int
    y: int

    def __add__(self, other: "SurfaceClass") -> "SurfaceClass":
        if other.space != self.space:
            raise ValueError("classes live on different spaces")
        return SurfaceClass(self.space, self.x + other.x, self.y + other.y)

    def __rmul__(self, k: int) -> "SurfaceClass":
        return SurfaceClass(self.space, k * self.x, k * self.y)


def intersect(space: ProjBundleSpace, classes: Sequence[SurfaceClass]) -> int:
    """Top intersection of ``dim`` divisor classes, expanded multilinearly."""
    if len(classes) != space.dim:
        raise ValueError(f"need {space.dim} classes on a {space.dim}-fold, got {len(classes)}")
    if any(c.space != space for c in classes):
        raise ValueError("class does not belong to this space")
    xs = [c.x for c in classes]
    total = math.prod(xs) * space.top_self_intersection
    for j, c in enumerate(classes):
        total += c.y * math.prod(xs[:j] + xs[j + 1:])
    return total


def relative_canonical(space: ProjBundleSpace) -> SurfaceClass:
    """``omega_{P/P^1} = -n xi - (sum of drops) P``."""
    return SurfaceClass(space, -space.n, -sum(space.drops))


def sigma0_incidence(a: int, b: int, N: int) -> int:
    """``Y . sigma_0`` for ``Y`` in ``|3 Sigma_1 + N P|``, ``sigma_0`` the negative section of ``Sigma_1``."""
    if not 0 <= a <= b:
        raise ValueError("need 0 <= a <= b")
    # on Sigma_1 = F_{b-a}: (3 sigma_0 + (N - 3a) f) . sigma_0
    return 3 * (a - b) + (N - 3 * a)


def leray_cohomology(space: ProjBundleSpace, k: int, t: int) -> Cohomology:
    """``H^i(O(k xi + t P))`` via ``phi_* O(k xi + t P) = Sym^k(phi_* O(xi)) (t)``."""
    if k < 0:
        raise ValueError("negative fiber degree (relative duality regime) is not supported")
    return cohomology(sym_power(space.pushforward(), k), t)


def base_locus_empty(space: ProjBundleSpace, t: int) -> bool:
    """Whether ``|xi + t P|`` is base point free, i.e. ``t >= max drop``."""
    return t >= space.drops[-1]


@dataclass(frozen=True)
class CoverNumerology:
    """Numerical data of a genus one fibration of order 2 or 3 in its model space.

    ``d`` is ``chi(O_Y)``, ``canonical_coeff`` the coefficient of ``F`` in
    ``K_Y``; ``h1_max_t`` the largest twist with ``h^1(D + tF) != 0`` and
    ``basepoint_max_t`` the largest twist with a (guaranteed) base point,
    ``None`` when no base point criterion applies.
    """

    n: int
    a: int
    b: int | None
    N: int
    d: int
    canonical_coeff: int
    fiber_degree: int
    h1_max_t: int
    basepoint_max_t: int | None

    @property
    def space(self) -> ProjBundleSpace:
        return ProjBundleSpace([self.a] if self.n == 2 else [self.a, self.b])

    @property
    def splitting_type(self) -> SplittingType:
        """Normalized ``R^1 f_* O_Y(-D)``: ``(-d, a-d)`` or ``(-d, a-d, b-d)``."""
        return self.space.pushforward().r1_from_pushforward(self.d)

    def d_squared(self, t: int = 0) -> int:
        if self.n == 2:
            return -2 * self.a + 4 * t
        return -2 * self.a - 2 * self.b + self.d + 6 * t

    def h1_nonzero(self, t: int) -> bool:
        return t <= self.h1_max_t

    def has_basepoint(self, t: int) -> bool | None:
        if self.basepoint_max_t is None:
            return None
        return t <= self.basepoint_max_t

    def to_dict(self) -> dict:
        return {
            "n": self.n, "a": self.a, "b": self.b, "N": self.N, "d": self.d,
            "canonical_coeff": self.canonical_coeff, "fiber_degree": self.fiber_degree,
            "h1_max_t": self.h1_max_t, "basepoint_max_t": self.basepoint_max_t,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CoverNumerology":
        if data["n"] == 2:
            return double_cover(data["a"], data["N"])
        return triple_cover(data["a"], data["b"], data["N"])


def double_cover(a: int, N: int) -> CoverNumerology:
    """Order-2 fibration as a double cover of ``F_a`` branched along ``|4 sigma_0 + 2N P|``."""
    if a < 0:
        raise ValueError("need a >= 0")
    if N < 2 * a + 1:
        raise ValueError(f"need N >= 2a + 1 = {2 * a + 1}, got N={N}")
    if a == 0 and N < 2:
        raise ValueError("a = 0 needs N >= 2")
    return CoverNumerology(
        n=2, a=a, b=None, N=N, d=N - a, canonical_coeff=N - a - 2, fiber_degree=2,
        h1_max_t=a - 2, basepoint_max_t=a - 1,
    )


def triple_cover(a: int, b: int, N: int) -> CoverNumerology:
    """Order-3 fibration embedded in ``P(O + O(a) + O(b))`` as ``|3 Sigma_1 + N P|``."""
    if not 0 <= a <= b:
        raise ValueError("need 0 <= a <= b")
    if N < 3 * b:
        raise ValueError(f"need N >= 3b = {3 * b}, got N={N}")
    if a == b and N < 3 * b + 1:
        raise ValueError(f"a = b needs N >= 3b + 1 = {3 * b + 1}, got N={N}")
    if a == b == 0 and N < 2:
        raise ValueError("a = b = 0 needs N >= 2")
    bp = b - 1 if (N >= 3 * b + 1 and a < b) else None
    return CoverNumerology(
        n=3, a=a, b=b, N=N, d=N - a - b, canonical_coeff=N - a - b - 2, fiber_degree=3,
        h1_max_t=b - 2, basepoint_max_t=bp,
    )


def hirzebruch_square(a: int, x: int, y: int) -> int:
    """``(x sigma + y f)^2`` on ``F_a``."""
    return intersect(hirzebruch(a), [SurfaceClass(hirzebruch(a), x, y)] * 2)


@dataclass(frozen=True)
class RationalSurfaceDivisor:
    n: int
    hirzebruch_index: int
    class_coeffs: tuple[int, int]
    d_squared: int
    fiber_degree: int
    chi: int
    pushforward: SplittingType

    def to_dict(self) -> dict:
        return {
            "n": self.n, "hirzebruch_index": self.hirzebruch_index,
            "class": list(self.class_coeffs), "d_squared": self.d_squared,
            "fiber_degree": self.fiber_degree, "chi": self.chi,
            "pushforward": list(self.pushforward.twists),
        }


def rational_surface_divisor(n: int) -> RationalSurfaceDivisor:
    """Smooth rational curve ``D`` with ``D^2 = n - 2`` on a rational elliptic surface.

    The curve is the proper transform of a general member of a linear system on
    a Hirzebruch surface dominated by the surface.  Adjunction with
    ``K = -F`` gives ``D.F = D^2 + 2`` and Riemann-Roch gives ``chi(O(D)) = n``,
    so ``pi_* O(D)`` is trivial of rank ``n``.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        a, coeffs = 1, (1, 0)  # a section: the (-1)-curve
    elif n == 2:
        a, coeffs = 0, (0, 1)  # a fiber of the ruling
    elif n % 2 == 0:
        a, coeffs = 2, (1, n // 2)
    else:
        a, coeffs = 1, (1, (n - 1) // 2)
    d2 = hirzebruch_square(a, *coeffs)
    if d2 != n - 2:
        raise AssertionError(f"D^2 = {d2} != n - 2 = {n - 2}")
    # -2 = D^2 + D.K and K = -F on the rational elliptic surface
    fiber_degree = d2 + 2
    chi, rem = divmod(d2 + fiber_degree, 2)
    chi += 1
    assert rem == 0
    return RationalSurfaceDivisor(n, a, coeffs, d2, fiber_degree, chi, SplittingType([0] * chi))


def numerology_table(corollary: str, dmin: int = 2, dmax: int = 10) -> list[dict]:
    """Sharpness rows for order 2 (``"n2"``) or order 3 (``"n3"``) fibrations."""
    rows = []
    for d in range(dmin, dmax + 1):
        if corollary == "n2":
            a = d - 1
            cov = double_cover(a, 2 * a + (d - a))
            rows.append({
                "d": d, "a_max": a, "N": cov.N,
                "D2_h1": cov.d_squared(a - 2), "D2_bp": cov.d_squared(a - 1),
                "formula": "D^2 = -2a + 4t; t = a-2 -> 2d-10, t = a-1 -> 2d-6",
            })
        elif corollary == "n3":
            b, a = d - 1, d - 2
            h1 = triple_cover(a, b, a + b + d)
            if d >= 3:
                b3, a3 = d - 2, d - 3
                bp_cov, bp_t = triple_cover(a3, b3, a3 + b3 + d), b3 - 1
            else:
                a3 = b3 = 1
                bp_cov, bp_t = triple_cover(1, 1, 4), 0
            rows.append({
                "d": d, "h1_ab": [a, b], "D2_h1": h1.d_squared(b - 2),
                "bp_ab": [a3, b3], "D2_bp": bp_cov.d_squared(bp_t),
                "formula": "D_t^2 = -2a - 2b + d + 6t; d = 2b-a, t = b-2 -> 3d-12; d = 2b-a+1, t = b-1 -> 3d-8",
            })
        else:
            raise ValueError(f"unknown corollary {corollary!r}; expected 'n2' or 'n3'")
    return rows
