"""Semantics attached to real Weil polynomials.

Conversions between the degree-g real form h and the degree-2g Weil
polynomial f(x) = x^g h(x + q/x), exact point and place counts through the
Newton identities, defect, ordinarity, and Waterhouse admissibility of
elliptic traces.

Sign convention, pinned once: the Frobenius trace t is the sum of the roots
of h, #C(F_q) = q + 1 - t, and an elliptic curve of trace t contributes the
factor (x - t) to h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import arith, intpoly
from .intpoly import IntPoly


@dataclass(frozen=True)
class RealWeilPoly:
    """Monic integer polynomial of degree g, all roots in [-2*sqrt(q), 2*sqrt(q)]."""

    h: tuple[int, ...]
    q: int
    g: int

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(self.h))
        if intpoly.degree(self.h) != self.g or self.g < 1:
            raise ValueError("degree of h must equal g >= 1")
        if self.h[-1] != 1:
            raise ValueError("h must be monic")
        if arith.prime_power_split(self.q) is None:
            raise ValueError(f"{self.q} is not a prime power")

    @classmethod
    def checked(cls, h, q: int) -> "RealWeilPoly":
        h = intpoly.normalize(h)
        if not intpoly.is_real_weil_shape(h, q):
            raise ValueError("polynomial fails the real Weil shape test")
        return cls(tuple(h), q, intpoly.degree(h))

    @property
    def coeffs(self) -> IntPoly:
        return list(self.h)

    def trace(self) -> int:
        return -self.h[-2]


@dataclass(frozen=True)
class WeilPoly:
    """Monic degree-2g polynomial f with f(x) = x^g h(x + q/x)."""

    f: tuple[int, ...]
    q: int
    g: int

    @property
    def coeffs(self) -> IntPoly:
        return list(self.f)

    def c(self, i: int) -> int:
        """Coefficient c_i with f = x^2g + c_1 x^{2g-1} + ... (c_0 = 1)."""
        return self.f[2 * self.g - i]


@dataclass(frozen=True)
class PlaceCountProfile:
    point_counts: tuple[int, ...]  # N_n for n = 1..horizon
    place_counts: tuple[int, ...]  # a_n for n = 1..horizon
    horizon: int

    def N(self, n: int) -> int:
        return self.point_counts[n - 1]

    def a(self, n: int) -> int:
        return self.place_counts[n - 1]


@dataclass(frozen=True)
class EllipticTrace:
    t: int
    q: int

    @property
    def point_count(self) -> int:
        return self.q + 1 - self.t


def real_to_weil(h: RealWeilPoly) -> WeilPoly:
    """Expand f(x) = x^g h(x + q/x) = sum_k b_k x^k (x^2 + q)^{g-k}."""
    g, q = h.g, h.q
    f: IntPoly = []
    for j in range(g + 1):
        term = intpoly.poly_mul([0] * (g - j) + [h.h[j]],
                                intpoly.poly_pow([q, 0, 1], j))
        f = intpoly.poly_add(f, term)
    return WeilPoly(tuple(f), q, g)


def weil_coeffs_from_real(b: list[int], q: int, g: int, upto: int) -> list[int]:
    """c_0..c_upto of the Weil polynomial from the leading real coefficients.

    b is [b_0=1, b_1, ..., b_n] with n >= upto; c_i depends only on b_0..b_i.
    """
    cs = []
    for n in range(upto + 1):
        c = 0
        for k in range(n, -1, -2):
            j = (n - k) // 2
            c += b[k] * math.comb(g - k, j) * q**j
        cs.append(c)
    return cs


def weil_to_real(f: WeilPoly) -> RealWeilPoly:
    """Invert real_to_weil, rejecting inputs without the functional symmetry."""
    g, q = f.g, f.q
    if intpoly.degree(f.f) != 2 * g or f.f[-1] != 1:
        raise ValueError("Weil polynomial must be monic of degree 2g")
    b = [1]
    for n in range(1, g + 1):
        partial = 0
        for k in range(n - 2, -1, -2):
            j = (n - k) // 2
            partial += b[k] * math.comb(g - k, j) * q**j
        b.append(f.c(n) - partial)
    h = list(reversed(b))
    cand = RealWeilPoly.checked(h, q)
    if real_to_weil(cand).f != f.f:
        raise ValueError("input does not satisfy the Weil symmetry x^g h(x + q/x)")
    return cand


def power_sums(f: IntPoly, upto: int) -> list[int]:
    """s_1..s_upto for the roots of monic f, by the Newton identities."""
    d = intpoly.degree(f)
    # e_i = (-1)^i * coefficient of x^{d-i}
    c = [f[d - i] for i in range(d + 1)]
    s = [0] * (upto + 1)
    for n in range(1, upto + 1):
        acc = -n * c[n] if n <= d else 0
        for i in range(1, min(n, d) + 1):
            if i < n:
                acc -= c[i] * s[n - i]
        s[n] = acc
    return s[1:]


def point_counts(h: RealWeilPoly, horizon: int) -> PlaceCountProfile:
    """Exact N_n = q^n + 1 - s_n and place counts a_n by Mobius inversion."""
    if horizon < 1:
        raise ValueError("horizon must be positive")
    f = real_to_weil(h)
    s = power_sums(f.coeffs, horizon)
    ns = [h.q**n + 1 - s[n - 1] for n in range(1, horizon + 1)]
    aa = []
    for n in range(1, horizon + 1):
        tot = 0
        for d in arith.divisors(n):
            tot += arith.mobius(n // d) * ns[d - 1]
        if tot % n:
            raise ArithmeticError(f"place count a_{n} is not integral")
        aa.append(tot // n)
    return PlaceCountProfile(tuple(ns), tuple(aa), horizon)


def defect(h: RealWeilPoly) -> int:
    """g*m + t with m = floor(2*sqrt(q)); 0 exactly at the Weil-Serre bound."""
    m = math.isqrt(4 * h.q)
    d = h.g * m + h.trace()
    if d < 0:
        raise ValueError("negative defect: input is not real-Weil-shaped")
    return d


def is_ordinary(h: RealWeilPoly) -> bool:
    return math.gcd(h.h[0], h.q) == 1


def admissible_elliptic_trace(t: int, q: int) -> bool:
    """Waterhouse classification of Frobenius traces of elliptic curves."""
    split = arith.prime_power_split(q)
    if split is None:
        raise ValueError(f"{q} is not a prime power")
    p, a = split
    if t * t > 4 * q:
        return False
    if t % p != 0:
        return True
    if t * t == 4 * q:
        return a % 2 == 0
    if t * t == q:
        return a % 2 == 0 and p % 3 != 1
    if t == 0:
        return a % 2 == 1 or p % 4 != 1
    if a % 2 == 1 and abs(t) == p ** ((a + 1) // 2):
        return p in (2, 3)
    return False
