"""Polynomial arithmetic modulo integers: GF(p) helpers and Hensel lifting.

Coefficient lists are ascending, reduced into [0, m).  Division requires an
invertible leading coefficient, which callers guarantee by working with
monic divisors or prime moduli.
"""

from __future__ import annotations

from typing import Sequence

IntPoly = list[int]


def mod_normalize(f: Sequence[int], m: int) -> IntPoly:
    c = [x % m for x in f]
    while c and c[-1] == 0:
        c.pop()
    return c


def mod_add(f: Sequence[int], g: Sequence[int], m: int) -> IntPoly:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return mod_normalize(out, m)


def mod_sub(f: Sequence[int], g: Sequence[int], m: int) -> IntPoly:
    return mod_add(f, [-c for c in g], m)


def mod_mul(f: Sequence[int], g: Sequence[int], m: int) -> IntPoly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return mod_normalize(out, m)


def mod_divmod(f: Sequence[int], g: Sequence[int], m: int) -> tuple[IntPoly, IntPoly]:
    """Division with invertible leading coefficient of g modulo m."""
    g = mod_normalize(g, m)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = pow(g[-1], -1, m)
    rem = [x % m for x in f]
    dq = len(rem) - len(g)
    if dq < 0:
        return [], mod_normalize(rem, m)
    quot = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + len(g) - 1] * inv % m
        quot[i] = c
        if c:
            for j, gc in enumerate(g):
                rem[i + j] = (rem[i + j] - c * gc) % m
    return mod_normalize(quot, m), mod_normalize(rem[: len(g) - 1], m)


def mod_pow(base: Sequence[int], exp: int, modpoly: Sequence[int], m: int) -> IntPoly:
    result: IntPoly = [1]
    acc = mod_divmod(base, modpoly, m)[1]
    while exp:
        if exp & 1:
            result = mod_divmod(mod_mul(result, acc, m), modpoly, m)[1]
        acc = mod_divmod(mod_mul(acc, acc, m), modpoly, m)[1]
        exp >>= 1
    return result


def gf_ext_euclid(a: Sequence[int], b: Sequence[int], p: int) -> tuple[IntPoly, IntPoly, IntPoly]:
    """(gcd, s, t) over GF(p) with s*a + t*b = gcd, gcd monic."""
    r0, r1 = mod_normalize(a, p), mod_normalize(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = mod_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, mod_sub(s0, mod_mul(q, s1, p), p)
        t0, t1 = t1, mod_sub(t0, mod_mul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = mod_normalize([c * inv for c in r0], p)
        s0 = mod_normalize([c * inv for c in s0], p)
        t0 = mod_normalize([c * inv for c in t0], p)
    return r0, s0, t0


def gf_gcd(a: Sequence[int], b: Sequence[int], p: int) -> IntPoly:
    return gf_ext_euclid(a, b, p)[0]


def hensel_lift_factor(h: Sequence[int], a0: Sequence[int], p: int,
                       target: int) -> tuple[IntPoly, IntPoly]:
    """Lift a monic factor a0 of h mod p to (A, B) with h = A*B mod p**target,
    A monic and A = a0 mod p.  a0 must be coprime to h/a0 mod p."""
    a0 = mod_normalize(a0, p)
    b0, rem = mod_divmod(h, a0, p)
    if rem:
        raise ValueError("a0 does not divide h modulo p")
    gcd, s, t = gf_ext_euclid(a0, b0, p)
    if gcd != [1]:
        raise ValueError("factor is not coprime to its cofactor modulo p")
    A, B = list(a0), list(b0)
    modulus = p
    for _ in range(1, target):
        modulus *= p
        # e = (h - A*B)/ (modulus/p), defined mod p
        prod = mod_mul(A, B, modulus)
        diff = mod_sub(list(h), prod, modulus)
        e = mod_normalize([c // (modulus // p) for c in diff], p)
        # dA = t*e mod A over GF(p); dB = (e - dA*B)/A over GF(p)
        dA = mod_divmod(mod_mul(t, e, p), A, p)[1]
        num = mod_sub(e, mod_mul(dA, B, p), p)
        dB, r2 = mod_divmod(num, A, p)
        assert not r2
        A = mod_add(A, [(modulus // p) * c for c in dA], modulus)
        B = mod_add(B, [(modulus // p) * c for c in dB], modulus)
    return A, B


def gf_trace_to_prime_field(elem: Sequence[int], modpoly: Sequence[int], p: int) -> int:
    """Trace from GF(p^d) = GF(p)[y]/(modpoly) down to GF(p)."""
    d = len(mod_normalize(modpoly, p)) - 1
    acc: IntPoly = []
    cur = mod_divmod(elem, modpoly, p)[1]
    for _ in range(d):
        acc = mod_add(acc, cur, p)
        cur = mod_pow(cur, p, modpoly, p)
    if len(acc) > 1:
        raise ArithmeticError("trace did not land in the prime field")
    return acc[0] if acc else 0
