"""Recursive enumeration of real Weil polynomial candidates.

The search walks coefficients b_1, b_2, ... of h = x^g + b_1 x^{g-1} + ...
in lexicographic order.  At depth n the scaled derivative
D_n = h^(g-n) / (g-n)! depends on b_n only through its constant term, so the
set of admissible b_n is cut out by sign conditions that are affine in b_n:
one at each critical point of D_n (the roots of D_{n-1}, isolated exactly
with Sturm bisection) and one at each end of the root interval
[-2*sqrt(q), 2*sqrt(q)].  Interval arithmetic over the isolating intervals
gives a sound over-approximation of the admissible range, which is widened
by one on each side and then every integer candidate is verified exactly.

Place-count constraints (a_n >= 0 and friends) prune further: a_n is affine
in b_n with slope one, so each required minimum is a lower cut on b_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from . import arith, intpoly, weil
from .intpoly import IntPoly
from .weil import RealWeilPoly


@dataclass(frozen=True)
class EnumConstraints:
    exact_point_count: int | None = None
    max_defect: int | None = None
    require_nonneg_places_to: int | None = None
    extra_lower_bounds: dict[int, int] | None = None

    def place_minimum(self, n: int) -> int | None:
        """Required minimum for a_n, or None when unconstrained."""
        req = None
        if self.require_nonneg_places_to is not None and n <= self.require_nonneg_places_to:
            req = 0
        if self.extra_lower_bounds and n in self.extra_lower_bounds:
            lo = self.extra_lower_bounds[n]
            req = lo if req is None else max(req, lo)
        return req


@dataclass
class CoefficientFrame:
    """State after fixing b_1..b_{n-1}: the partial polynomial D_{n-1} and
    exact isolating data for its real roots (the critical points of D_n)."""

    q: int
    g: int
    fixed: tuple[int, ...]          # b_1 .. b_{n-1}
    depth: int                      # n
    derivative_root_isolation: tuple[tuple[Fraction, Fraction, int], ...] | None
    partial: tuple[int, ...] = ()   # D_{n-1}, ascending coefficients
    chain: list[IntPoly] | None = None  # Sturm chain of squarefree(D_{n-1})

    @property
    def valid(self) -> bool:
        return self.derivative_root_isolation is not None


def _partial_poly(q: int, g: int, prefix: Sequence[int], n: int) -> IntPoly:
    """D_n = sum_k b_k C(g-k, g-n) x^{n-k} for b = (1, b_1, ..., b_n)."""
    b = [1, *prefix]
    out = [0] * (n + 1)
    for k in range(n + 1):
        out[n - k] = b[k] * math.comb(g - k, g - n)
    return intpoly.normalize(out)


def _totally_real_bounded(p: IntPoly, q: int) -> bool:
    return _bounded_real_data(p, q) is not None


def _bounded_real_data(p: IntPoly, q: int) -> tuple[IntPoly, list[IntPoly]] | None:
    """(squarefree part, its Sturm chain) when every root of p is real with
    absolute value at most 2*sqrt(q), else None."""
    sf = intpoly.squarefree_part(p)
    chain = intpoly.sturm_chain(sf)
    distinct = (intpoly._chain_variations(chain, "-inf")
                - intpoly._chain_variations(chain, "+inf"))
    if distinct != intpoly.degree(sf):
        return None
    gsq = intpoly.root_square_transform(sf)
    if intpoly.count_real_roots_in(gsq, (4 * q, "+inf")) != 0:
        return None
    return sf, chain


def _count_half_open(chain: list[IntPoly], lo: Fraction, hi: Fraction) -> int:
    return intpoly._chain_variations(chain, lo) - intpoly._chain_variations(chain, hi)


def _isolate_roots(d: IntPoly, q: int,
                   data: tuple[IntPoly, list[IntPoly]] | None = None
                   ) -> tuple[list[tuple[Fraction, Fraction]], list[IntPoly], IntPoly]:
    """Disjoint half-open intervals (lo, hi], ascending, each holding exactly
    one distinct real root of d; also returns the Sturm chain and the
    squarefree part used for counting."""
    if data is None:
        sf = intpoly.squarefree_part(d)
        chain = intpoly.sturm_chain(sf)
    else:
        sf, chain = data
    bound = math.isqrt(4 * q) + 1
    work = [(Fraction(-bound - 1), Fraction(bound))]
    done: list[tuple[Fraction, Fraction]] = []
    while work:
        lo, hi = work.pop()
        cnt = _count_half_open(chain, lo, hi)
        if cnt == 0:
            continue
        if cnt == 1:
            done.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        work.append((lo, mid))
        work.append((mid, hi))
    done.sort()
    return done, chain, sf


def _refine(chain: list[IntPoly], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """One bisection step keeping the unique root of the chain's polynomial."""
    mid = (lo + hi) / 2
    if _count_half_open(chain, lo, mid) == 1:
        return lo, mid
    return mid, hi


def _vanishes_in(p: IntPoly, lo: Fraction, hi: Fraction) -> bool:
    """Whether p has a root in (lo, hi]; sound when p's roots there are
    isolated by the interval."""
    if intpoly.sign_at(p, hi) == 0:
        return True
    if intpoly.degree(p) < 1:
        return False
    return intpoly.count_real_roots_in(p, (lo, hi)) > 0


def _multiplicities(d: IntPoly, intervals: list[tuple[Fraction, Fraction]]) -> list[int]:
    """Multiplicity of the single root of d in each isolating interval."""
    if len(intervals) == intpoly.degree(d):
        return [1] * len(intervals)
    mults = [1] * len(intervals)
    gk = intpoly.primitive_gcd(d, intpoly.derivative(d))
    while intpoly.degree(gk) >= 1:
        for i, (lo, hi) in enumerate(intervals):
            if _vanishes_in(gk, lo, hi):
                mults[i] += 1
        gk = intpoly.primitive_gcd(gk, intpoly.derivative(gk))
    return mults


def make_frame(q: int, g: int, prefix: Sequence[int],
               data: tuple[IntPoly, list[IntPoly]] | None = None) -> CoefficientFrame:
    """Frame at depth len(prefix)+1; invalid when the partial polynomial
    fails the bounded-real-roots certificate.  A precomputed
    (squarefree part, Sturm chain) pair for D_{n-1} skips re-verification."""
    n = len(prefix) + 1
    d = _partial_poly(q, g, prefix, n - 1)
    if intpoly.degree(d) < 1:
        return CoefficientFrame(q, g, tuple(prefix), n, (), tuple(d))
    if data is None:
        data = _bounded_real_data(d, q)
        if data is None:
            return CoefficientFrame(q, g, tuple(prefix), n, None, tuple(d))
    intervals, chain, _sf = _isolate_roots(d, q, data)
    mults = _multiplicities(d, intervals)
    assert sum(mults) == intpoly.degree(d)
    iso = tuple((lo, hi, m) for (lo, hi), m in zip(intervals, mults))
    return CoefficientFrame(q, g, tuple(prefix), n, iso, tuple(d), chain)


def _sqrt_enclosure(q: int, precision_bits: int) -> tuple[Fraction, Fraction]:
    """Rational [lo, hi] with lo <= 2*sqrt(q) <= hi."""
    den = 1 << precision_bits
    s = math.isqrt(4 * q * den * den)
    return Fraction(s, den), Fraction(s + 1, den)


_MAX_REFINE = 64


def coefficient_interval(frame: CoefficientFrame, q: int | None = None,
                         g: int | None = None) -> tuple[int, int] | None:
    """Sound integer over-approximation of the admissible b_n range, or None
    when the frame itself is inadmissible."""
    q = frame.q if q is None else q
    g = frame.g if g is None else g
    if not frame.valid:
        return None
    n = frame.depth
    # D_n with the b_n slot zeroed; every condition reads b_n >=/<= -Q(x0).
    qpoly = _partial_poly(q, g, [*frame.fixed, 0], n)
    if not qpoly:
        qpoly = [0]

    lowers: list[Fraction] = []
    uppers: list[Fraction] = []

    def add(lo: Fraction, hi: Fraction, want_lower: bool, want_upper: bool,
            refiner) -> None:
        for _ in range(_MAX_REFINE):
            mn, mx = intpoly.eval_on_interval(qpoly, lo, hi)
            if mx - mn <= Fraction(1, 2) or refiner is None:
                break
            lo, hi = refiner(lo, hi)
        mn, mx = intpoly.eval_on_interval(qpoly, lo, hi)
        if want_lower:
            lowers.append(-mx)
        if want_upper:
            uppers.append(-mn)

    # Interval-end conditions: D_n(2*sqrt(q)) >= 0 and (-1)^n D_n(-2*sqrt(q)) >= 0.
    bits = [8]

    def refine_pos(lo, hi):
        bits[0] += 4
        return _sqrt_enclosure(q, bits[0])

    def refine_neg(lo, hi):
        a, b = _sqrt_enclosure(q, bits[0] + 4)
        bits[0] += 4
        return -b, -a

    plo, phi = _sqrt_enclosure(q, bits[0])
    add(plo, phi, True, False, refine_pos)
    if n % 2 == 0:
        add(-phi, -plo, True, False, refine_neg)
    else:
        add(-phi, -plo, False, True, refine_neg)

    # Critical-point conditions, descending through the isolated roots.
    iso = sorted(frame.derivative_root_isolation, key=lambda t: t[0], reverse=True)
    chain_refiner = (lambda a, b: _refine(frame.chain, a, b)) if frame.chain else None
    pos = 1
    for lo, hi, mult in iso:
        if mult >= 2:
            add(lo, hi, True, True, chain_refiner)
        elif pos % 2 == 1:
            add(lo, hi, False, True, chain_refiner)  # D_n(u) <= 0
        else:
            add(lo, hi, True, False, chain_refiner)  # D_n(u) >= 0
        pos += mult

    lo_bound = max(lowers) if lowers else None
    hi_bound = min(uppers) if uppers else None
    if lo_bound is None or hi_bound is None:
        raise AssertionError("both interval ends must produce conditions")
    lo_int = math.ceil(lo_bound) - 1
    hi_int = math.floor(hi_bound) + 1
    if lo_int > hi_int:
        return None
    return lo_int, hi_int


def _place_cut(frame: CoefficientFrame, n: int, required: int) -> int:
    """Smallest b_n with a_n >= required (a_n has slope 1 in b_n)."""
    q, g = frame.q, frame.g
    b = [1, *frame.fixed, 0]
    cs = weil.weil_coeffs_from_real(b, q, g, n)
    s = [0] * (n + 1)
    for m in range(1, n + 1):
        acc = -m * cs[m]
        for i in range(1, m):
            acc -= cs[i] * s[m - i]
        s[m] = acc
    ns = [q**m + 1 - s[m] for m in range(1, n + 1)]
    total = 0
    for d in arith.divisors(n):
        total += arith.mobius(n // d) * ns[d - 1]
    # a_n(b_n) = (total + n*b_n)/n >= required
    return -((total - n * required) // n)


def place_count_interval(frame: CoefficientFrame,
                         constraints: EnumConstraints) -> tuple[int, int] | None:
    """coefficient_interval further cut by the place-count and depth-1
    constraints."""
    iv = coefficient_interval(frame)
    if iv is None:
        return None
    lo, hi = iv
    n = frame.depth
    if n == 1:
        if constraints.exact_point_count is not None:
            b1 = constraints.exact_point_count - frame.q - 1
            lo, hi = max(lo, b1), min(hi, b1)
        if constraints.max_defect is not None:
            m = math.isqrt(4 * frame.q)
            lo = max(lo, frame.g * m - constraints.max_defect)
    if n <= frame.g:
        req = constraints.place_minimum(n)
        if req is not None:
            lo = max(lo, _place_cut(frame, n, req))
    if lo > hi:
        return None
    return lo, hi


def _h_from_prefix(prefix: Sequence[int]) -> IntPoly:
    # prefix = (b_1, ..., b_g); h ascending = [b_g, ..., b_1, 1]
    return [*reversed(prefix), 1]


def _search(frame: CoefficientFrame,
            constraints: EnumConstraints) -> Iterator[tuple[int, ...]]:
    q, g, n = frame.q, frame.g, frame.depth
    iv = place_count_interval(frame, constraints)
    if iv is None:
        return
    lo, hi = iv
    for bn in range(lo, hi + 1):
        prefix = (*frame.fixed, bn)
        dn = _partial_poly(q, g, prefix, n)
        data = _bounded_real_data(dn, q)
        if data is None:
            continue
        if n == g:
            yield prefix
        else:
            yield from _search(make_frame(q, g, prefix, data), constraints)


def enumerate_real_weil(q: int, g: int,
                        constraints: EnumConstraints | None = None) -> Iterator[RealWeilPoly]:
    """All monic degree-g integer polynomials with roots real in
    [-2*sqrt(q), 2*sqrt(q)] meeting the constraints, in lexicographic
    coefficient order."""
    if arith.prime_power_split(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if g < 1:
        raise ValueError("g must be positive")
    constraints = constraints or EnumConstraints()
    horizon = constraints.require_nonneg_places_to or 0
    extra = constraints.extra_lower_bounds or {}
    post_ns = sorted(set([n for n in range(g + 1, horizon + 1)] +
                         [n for n in extra if n > g]))
    for prefix in _search(make_frame(q, g, ()), constraints):
        cand = RealWeilPoly(tuple(_h_from_prefix(prefix)), q, g)
        if post_ns:
            profile = weil.point_counts(cand, max(post_ns))
            ok = True
            for n in post_ns:
                req = constraints.place_minimum(n)
                if req is not None and profile.a(n) < req:
                    ok = False
                    break
            if not ok:
                continue
        yield cand


_candidate_cache: dict[tuple[int, int], list[IntPoly]] = {}


def real_weil_candidates(q: int, deg: int) -> list[IntPoly]:
    """Cached unconstrained enumeration, as plain coefficient lists; serves
    trial division in intpoly.factor_monic_real_weil."""
    key = (q, deg)
    if key not in _candidate_cache:
        _candidate_cache[key] = [
            cand.coeffs for cand in enumerate_real_weil(q, deg)
        ]
    return _candidate_cache[key]
