"""Arithmetic in the algebra Q[x]/(radical of a Weil polynomial).

Elements are rational polynomials reduced mod a squarefree monic modulus.
The module provides norms, the order lattice Z[pi, pibar] with exact
membership tests, e-th roots of Frobenius (the descent search), roots of
unity inside the order, and residue splitting data of h modulo primes.

Factoring over Q and over number fields is delegated to sympy; everything
else is done directly with exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy as sp

from . import arith, intpoly, modpoly
from .intpoly import IntPoly
from .weil import RealWeilPoly, WeilPoly, power_sums, real_to_weil, weil_to_real
from . import weil as weil_mod

QPoly = list[Fraction]


# ---------------------------------------------------------------------------
# Rational polynomial helpers


def qp_normalize(f: Sequence[Fraction]) -> QPoly:
    c = [Fraction(x) for x in f]
    while c and c[-1] == 0:
        c.pop()
    return c


def qp_add(f, g) -> QPoly:
    n = max(len(f), len(g))
    out = [Fraction(0)] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return qp_normalize(out)


def qp_sub(f, g) -> QPoly:
    return qp_add(f, [-Fraction(c) for c in g])


def qp_mul(f, g) -> QPoly:
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return qp_normalize(out)


def qp_divmod(f, g) -> tuple[QPoly, QPoly]:
    g = qp_normalize(g)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    rem = qp_normalize(f)
    dq = len(rem) - len(g)
    if dq < 0:
        return [], rem
    rem = list(rem)
    quot = [Fraction(0)] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + len(g) - 1] / g[-1]
        quot[i] = c
        for j, gc in enumerate(g):
            rem[i + j] -= c * gc
    return qp_normalize(quot), qp_normalize(rem[: len(g) - 1])


def qp_mod(f, g) -> QPoly:
    return qp_divmod(f, g)[1]


def qp_ext_euclid(a, b) -> tuple[QPoly, QPoly, QPoly]:
    """(gcd monic, s, t) with s*a + t*b = gcd over Q."""
    r0, r1 = qp_normalize(a), qp_normalize(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = qp_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, qp_sub(s0, qp_mul(q, s1))
        t0, t1 = t1, qp_sub(t0, qp_mul(q, t1))
    if r0:
        lc = r0[-1]
        r0 = [c / lc for c in r0]
        s0 = [c / lc for c in s0]
        t0 = [c / lc for c in t0]
    return qp_normalize(r0), qp_normalize(s0), qp_normalize(t0)


# ---------------------------------------------------------------------------
# Algebra elements


@dataclass(frozen=True)
class AlgebraElement:
    representative: tuple[Fraction, ...]
    modulus: tuple[int, ...]

    @classmethod
    def make(cls, rep: Sequence, modulus: Sequence[int]) -> "AlgebraElement":
        modulus = tuple(intpoly.normalize(list(modulus)))
        red = qp_mod([Fraction(c) for c in rep], [Fraction(c) for c in modulus])
        return cls(tuple(red), modulus)

    def _check(self, other: "AlgebraElement") -> None:
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement.make(qp_add(list(self.representative),
                                          list(other.representative)), self.modulus)

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement.make(qp_sub(list(self.representative),
                                          list(other.representative)), self.modulus)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement.make(qp_mul(list(self.representative),
                                              list(other.representative)), self.modulus)
        return AlgebraElement.make([Fraction(other) * c for c in self.representative],
                                   self.modulus)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = AlgebraElement.make([1], self.modulus)
        base = self
        if e < 0:
            base = base.inverse()
            e = -e
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "AlgebraElement":
        g, s, _t = qp_ext_euclid(list(self.representative),
                                 [Fraction(c) for c in self.modulus])
        if g != [Fraction(1)]:
            raise ZeroDivisionError("element is not invertible in the algebra")
        return AlgebraElement.make(s, self.modulus)

    def is_zero(self) -> bool:
        return not self.representative


def frobenius_element(modulus: Sequence[int]) -> AlgebraElement:
    return AlgebraElement.make([0, 1], modulus)


def verschiebung_element(modulus: Sequence[int], q: int) -> AlgebraElement:
    """pibar = q / pi."""
    return q * frobenius_element(modulus).inverse()


def norm(e: AlgebraElement) -> Fraction:
    """Product of the conjugates of e over the modulus roots."""
    rep = qp_normalize(list(e.representative))
    d = intpoly.degree(list(e.modulus))
    if not rep:
        return Fraction(0)
    den = math.lcm(*(c.denominator for c in rep))
    pint = [int(c * den) for c in rep]
    r = intpoly.resultant(list(e.modulus), pint)
    return Fraction(r, den**d)


# ---------------------------------------------------------------------------
# The order Z[pi, pibar]


@dataclass(frozen=True)
class OrderLattice:
    modulus: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]  # HNF rows over scaled coordinates
    den: int                            # lattice lives in (1/den) Z^d


def order_lattice(f: WeilPoly) -> OrderLattice:
    modulus = intpoly.radical(f.coeffs)
    d = intpoly.degree(modulus)
    pi = frobenius_element(modulus)
    pibar = verschiebung_element(modulus, f.q)
    pi_pows = [AlgebraElement.make([1], modulus)]
    for _ in range(d - 1):
        pi_pows.append(pi_pows[-1] * pi)
    bar_pows = [AlgebraElement.make([1], modulus)]
    for _ in range(d - 1):
        bar_pows.append(bar_pows[-1] * pibar)
    gens = []
    for a in range(d):
        for b in range(d):
            rep = list((pi_pows[a] * bar_pows[b]).representative)
            rep += [Fraction(0)] * (d - len(rep))
            gens.append(rep)
    den = 1
    for row in gens:
        for c in row:
            den = math.lcm(den, c.denominator)
    rows = [[int(c * den) for c in row] for row in gens]
    hnf = intpoly.hermite_normal_form(rows)
    if len(hnf) != d:
        raise ArithmeticError("order lattice is not full rank")
    return OrderLattice(tuple(modulus), tuple(tuple(r) for r in hnf), den)


def contains(lat: OrderLattice, e: AlgebraElement) -> bool:
    if tuple(e.modulus) != lat.modulus:
        raise ValueError("modulus mismatch")
    d = intpoly.degree(list(lat.modulus))
    vec = [Fraction(c) * lat.den for c in e.representative]
    vec += [Fraction(0)] * (d - len(vec))
    if any(v.denominator != 1 for v in vec):
        return False
    w = [int(v) for v in vec]
    for row in lat.basis:
        pc = next(i for i, c in enumerate(row) if c)
        if w[pc] % row[pc]:
            return False
        k = w[pc] // row[pc]
        if k:
            for j in range(pc, d):
                w[j] -= k * row[j]
    return all(v == 0 for v in w)


# ---------------------------------------------------------------------------
# Field components of the algebra


def algebra_components(f: WeilPoly) -> list[IntPoly]:
    """Irreducible factors of the radical of f, via sympy."""
    rad = intpoly.radical(f.coeffs)
    x = sp.Symbol("x")
    poly = sp.Poly(list(reversed(rad)), x)
    comps = []
    for fac, mult in poly.factor_list()[1]:
        assert mult == 1
        comps.append([int(c) for c in reversed(fac.all_coeffs())])
    comps.sort(key=lambda c: (len(c), c))
    return comps


def _field_poly_gcd(A: list[QPoly], B: list[QPoly], comp: IntPoly) -> list[QPoly]:
    """Monic gcd of polynomials with coefficients in K = Q[x]/(comp)."""
    mod = [Fraction(c) for c in comp]

    def red(e: QPoly) -> QPoly:
        return qp_mod(e, mod)

    def is_unit_poly(P: list[QPoly]) -> bool:
        return len(P) == 1

    def kinv(e: QPoly) -> QPoly:
        g, s, _t = qp_ext_euclid(e, mod)
        if g != [Fraction(1)]:
            raise ZeroDivisionError("noninvertible coefficient in field gcd")
        return red(s)

    def pnorm(P: list[QPoly]) -> list[QPoly]:
        P = [red(c) for c in P]
        while P and not P[-1]:
            P.pop()
        return P

    def pdivmod(Pa: list[QPoly], Pb: list[QPoly]):
        Pb = pnorm(Pb)
        inv = kinv(Pb[-1])
        rem = [list(c) for c in pnorm(Pa)]
        dq = len(rem) - len(Pb)
        if dq < 0:
            return [], pnorm(rem)
        for i in range(dq, -1, -1):
            c = red(qp_mul(rem[i + len(Pb) - 1], inv))
            for j, bc in enumerate(Pb):
                rem[i + j] = qp_sub(rem[i + j], qp_mul(c, bc))
        return None, pnorm(rem[: len(Pb) - 1])

    a, b = pnorm(A), pnorm(B)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, r
    if a:
        inv = kinv(a[-1])
        a = pnorm([qp_mul(c, inv) for c in a])
    return a


def crt_combine(parts: list[tuple[QPoly, IntPoly]]) -> QPoly:
    """Representative congruent to r_j mod m_j for pairwise coprime m_j."""
    rep, mod = parts[0]
    rep = qp_normalize(rep)
    mod = [Fraction(c) for c in mod]
    for r2, m2 in parts[1:]:
        m2f = [Fraction(c) for c in m2]
        g, u, v = qp_ext_euclid(mod, m2f)
        if g != [Fraction(1)]:
            raise ValueError("moduli are not coprime")
        # rep + mod*u*(r2 - rep) is r2 mod m2 and rep mod mod
        delta = qp_mul(qp_mul(mod, u), qp_sub(qp_normalize(r2), rep))
        mod = qp_mul(mod, m2f)
        rep = qp_mod(qp_add(rep, delta), mod)
    return rep


# ---------------------------------------------------------------------------
# e-th roots of Frobenius


def eth_roots_of_frobenius(f: WeilPoly, e: int,
                           q0: int) -> list[tuple[AlgebraElement, IntPoly]]:
    """All pi0 in Z[pi, pibar] with pi0^e = pi and pi0*pibar0 = q0, paired
    with the characteristic polynomial f0 of pi0 over F_q0."""
    if e < 1 or arith.prime_power_split(q0) is None or q0**e != f.q:
        raise ValueError("q0 must be a prime power with q0^e = q")
    h = weil_to_real(f)
    if not weil_mod.is_ordinary(h):
        raise ValueError("descent search requires an ordinary class")
    from . import enumerate as enum_mod

    g = f.g
    target = [f.c(n) for n in range(1, 2 * g + 1)]
    matches: list[IntPoly] = []
    for h0 in enum_mod.real_weil_candidates(q0, g):
        f0 = real_to_weil(RealWeilPoly(tuple(h0), q0, g)).coeffs
        s = power_sums(f0, 2 * g * e)
        ok = True
        cs: list[int] = []
        for m in range(1, 2 * g + 1):
            acc = s[e * m - 1]
            for i in range(1, m):
                acc += cs[i - 1] * s[e * (m - i) - 1]
            if acc % m:
                ok = False
                break
            cm = -(acc // m)
            if cm != target[m - 1]:
                ok = False
                break
            cs.append(cm)
        if ok:
            matches.append(f0)

    comps = algebra_components(f)
    modulus = intpoly.radical(f.coeffs)
    lat = order_lattice(f)
    out: list[tuple[AlgebraElement, IntPoly]] = []
    seen: set[tuple[Fraction, ...]] = set()
    for f0 in matches:
        parts: list[tuple[QPoly, IntPoly]] = []
        good = True
        for comp in comps:
            # gcd of f0(w) and w^e - pi over K = Q[x]/(comp)
            A = [[Fraction(c)] if c else [] for c in f0]
            B: list[QPoly] = [[] for _ in range(e + 1)]
            B[0] = [Fraction(0), Fraction(-1)]  # -pi
            B[e] = [Fraction(1)]
            gcd = _field_poly_gcd(A, B, comp)
            if len(gcd) != 2:
                good = False
                break
            root = qp_sub([], gcd[0])  # -constant of the monic linear gcd
            parts.append((root, comp))
        if not good:
            continue
        rep = crt_combine(parts)
        pi0 = AlgebraElement.make(rep, modulus)
        if (pi0**e).representative != frobenius_element(modulus).representative:
            continue
        if not contains(lat, pi0):
            continue
        if pi0.representative in seen:
            continue
        seen.add(pi0.representative)
        out.append((pi0, f0))
    return out


# ---------------------------------------------------------------------------
# Roots of unity


_cyclo_cache: dict[tuple[tuple[int, ...], int], list[QPoly]] = {}


def _residue_degrees(comp: IntPoly, p: int) -> list[int] | None:
    """Degrees of the irreducible factors of comp modulo p, by distinct-degree
    factorization; None when comp is not squarefree mod p."""
    rem = modpoly.mod_normalize(comp, p)
    if len(rem) - 1 != intpoly.degree(comp):
        return None
    if modpoly.gf_gcd(rem, modpoly.mod_normalize(
            intpoly.derivative(comp), p), p) != [1]:
        return None
    degs: list[int] = []
    w = modpoly.mod_divmod([0, 1], rem, p)[1]
    i = 0
    while len(rem) - 1 > 0:
        i += 1
        if 2 * i > len(rem) - 1:
            degs.append(len(rem) - 1)
            break
        w = modpoly.mod_pow(w, p, rem, p)
        gi = modpoly.gf_gcd(modpoly.mod_sub(w, [0, 1], p), rem, p)
        if len(gi) - 1 > 0:
            degs.extend([i] * ((len(gi) - 1) // i))
            rem = modpoly.mod_divmod(rem, gi, p)[0]
            w = modpoly.mod_divmod(w, rem, p)[1]
    return degs


def _order_mod(p: int, k: int) -> int:
    o, acc = 1, p % k
    while acc != 1:
        acc = acc * p % k
        o += 1
    return o


def _zeta_possible(comp: IntPoly, k: int) -> bool:
    """Cheap necessary condition for a primitive k-th root of unity in
    Q[x]/(comp): at good primes p, every residue field GF(p^m) must contain
    one, i.e. ord_k(p) | m."""
    checked = 0
    p = 2
    while checked < 3 and p < 200:
        p = sp.nextprime(p)
        if k % p == 0:
            continue
        degs = _residue_degrees(comp, p)
        if degs is None:
            continue
        checked += 1
        o = _order_mod(p, k)
        if any(m % o for m in degs):
            return False
    return True


def _roots_of_cyclotomic_in_field(comp: IntPoly, k: int) -> list[QPoly]:
    """Representatives of the primitive k-th roots of unity in Q[x]/(comp)."""
    key = (tuple(comp), k)
    if key in _cyclo_cache:
        return _cyclo_cache[key]
    if k == 1:
        roots = [[Fraction(1)]]
    elif k == 2:
        roots = [[Fraction(-1)]]
    elif not _zeta_possible(comp, k):
        roots = []
    else:
        z = sp.Symbol("z")
        theta = sp.CRootOf(sp.Poly(list(reversed(comp)), sp.Symbol("x")).as_expr(), 0)
        phi = sp.cyclotomic_poly(k, z)
        roots = []
        try:
            _, factors = sp.factor_list(phi, z, extension=theta)
        except Exception:
            factors = []
        for fac, _m in factors:
            p = sp.Poly(fac, z)
            if p.degree() != 1:
                continue
            root_expr = sp.together(-p.all_coeffs()[1] / p.all_coeffs()[0])
            rp = sp.Poly(sp.expand(root_expr), theta)
            coeffs = [Fraction(sp.Rational(c)) for c in reversed(rp.all_coeffs())]
            mod = [Fraction(c) for c in comp]
            roots.append(qp_mod(coeffs, mod))
    _cyclo_cache[key] = roots
    return roots


def _euler_phi(k: int) -> int:
    out = k
    for p, _ in arith.factor_integer(k).factors:
        out -= out // p
    return out


def roots_of_unity_in_order(f: WeilPoly) -> list[tuple[int, AlgebraElement]]:
    """All roots of unity in Z[pi, pibar], as (multiplicative order, element)."""
    modulus = intpoly.radical(f.coeffs)
    comps = algebra_components(f)
    lat = order_lattice(f)
    per_comp: list[list[tuple[int, QPoly]]] = []
    for comp in comps:
        d = intpoly.degree(comp)
        found: list[tuple[int, QPoly]] = []
        for k in range(1, 4 * d * d + 4):
            phi = _euler_phi(k)
            if phi > d or (k > 2 and d % phi != 0):
                continue
            for root in _roots_of_cyclotomic_in_field(comp, k):
                found.append((k, root))
        per_comp.append(found)

    results: list[tuple[int, AlgebraElement]] = []
    seen: set[tuple[Fraction, ...]] = set()

    def rec(idx: int, chosen: list[tuple[int, QPoly]]):
        if idx == len(comps):
            order = math.lcm(*(k for k, _ in chosen))
            rep = crt_combine([(r, comps[i]) for i, (_k, r) in enumerate(chosen)])
            elem = AlgebraElement.make(rep, modulus)
            if elem.representative in seen:
                return
            if contains(lat, elem):
                seen.add(elem.representative)
                results.append((order, elem))
            return
        for k, root in per_comp[idx]:
            rec(idx + 1, chosen + [(k, root)])

    rec(0, [])
    results.sort(key=lambda kr: (kr[0], kr[1].representative))
    return results


# ---------------------------------------------------------------------------
# Splitting data


@dataclass(frozen=True)
class SplittingData:
    p: int
    factors: tuple[tuple[tuple[int, ...], int], ...]  # (coeffs, residue degree)
    multiplicities: tuple[int, ...]
    usable: bool

    @property
    def ramified(self) -> tuple[bool, ...]:
        return tuple(m >= 2 for m in self.multiplicities)


def splitting_data(h: RealWeilPoly, p: int) -> SplittingData:
    """Factorization of h mod p, flagged unusable when p^2 divides disc(h)."""
    if not arith.is_probable_prime(p):
        raise ValueError("p must be prime")
    x = sp.Symbol("x")
    poly = sp.Poly(list(reversed(h.coeffs)), x, modulus=p)
    factors = []
    mults = []
    for fac, m in poly.factor_list()[1]:
        coeffs = tuple(int(c) % p for c in reversed(fac.all_coeffs()))
        factors.append((coeffs, len(coeffs) - 1))
        mults.append(int(m))
    order = sorted(range(len(factors)), key=lambda i: factors[i])
    factors = tuple(factors[i] for i in order)
    mults = tuple(mults[i] for i in order)
    disc = intpoly.resultant(h.coeffs, intpoly.derivative(h.coeffs))
    v = 0
    d = disc
    while d and d % p == 0:
        v += 1
        d //= p
    usable = v <= 1
    return SplittingData(p, factors, mults, usable)
