"""Integer utilities: factorization, Mobius, square tests, Hermite constants.

Everything here is exact.  Factorization carries an iteration budget so that
callers (notably the squarefree test) can report "unknown" honestly instead
of stalling on a hard composite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

_TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class IntFactorization:
    value: int
    factors: tuple[tuple[int, int], ...]
    complete: bool
    cofactor: int = 1  # composite remainder when complete is False

    def recompose(self) -> int:
        n = self.cofactor
        for p, e in self.factors:
            n *= p**e
        return n

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, budget: int) -> int | None:
    # Brent's cycle variant; returns a nontrivial factor or None on budget
    # exhaustion.  n must be odd, composite, and not a prime power <= trial
    # limit (the caller guarantees this).
    if n % 2 == 0:
        return 2
    seed = 1
    spent = 0
    while spent < budget:
        seed += 1
        y, c, m = seed, seed + 1, 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                spent += min(m, r - k)
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                spent += 1
                if spent >= budget:
                    break
        if 1 < g < n:
            return g
    return None


DEFAULT_BUDGET = 2_000_000


def factor_integer(n: int, effort: int = DEFAULT_BUDGET) -> IntFactorization:
    """Factor |n| by trial division then rho, certifying primes by Miller-Rabin.

    complete=False means a composite cofactor remained when the iteration
    budget ran out; the known prime factors are still correct.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    m = abs(n)
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    w = 0
    while d <= _TRIAL_LIMIT and d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += wheel[w]
        w = (w + 1) % 8
    # Split what remains with rho.
    stack = [m] if m > 1 else []
    budget = effort
    incomplete = 1
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        if is_probable_prime(c):
            factors[c] = factors.get(c, 0) + 1
            continue
        root = isqrt_exact(c)
        if root is not None:
            stack.extend((root, root))
            continue
        g = _pollard_rho(c, budget) if budget > 0 else None
        if g is None:
            incomplete *= c
            continue
        stack.extend((g, c // g))
    complete = incomplete == 1
    items = tuple(sorted(factors.items()))
    return IntFactorization(value=n, factors=items, complete=complete,
                            cofactor=incomplete)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    if n == 1:
        return 1
    fac = factor_integer(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def isqrt_exact(n: int) -> int | None:
    """The non-negative s with s*s == n, or None."""
    if n < 0:
        return None
    s = math.isqrt(n)
    return s if s * s == n else None


def is_perfect_square(n: int) -> int | None:
    return isqrt_exact(n)


def is_squarefree(n: int, effort: int = DEFAULT_BUDGET) -> str:
    """Tri-state squarefreeness: 'yes', 'no', or 'unknown' on budget exhaustion.

    |n| = 1 counts as squarefree.
    """
    if n == 0:
        raise ValueError("0 is not a valid squarefree query")
    m = abs(n)
    if m == 1:
        return "yes"
    if isqrt_exact(m) is not None and m > 1:
        return "no"
    fac = factor_integer(m, effort)
    if any(e > 1 for _, e in fac.factors):
        return "no"
    if fac.complete:
        return "yes"
    # The cofactor might hide a square; a quick check catches perfect powers.
    if isqrt_exact(fac.cofactor) is not None:
        return "no"
    return "unknown"


@dataclass(frozen=True)
class HermiteBound:
    dimension: int
    bound_pow: Fraction  # exact upper bound on gamma_dimension ** dimension


# Known values of gamma_{2n}^{2n} for 2n <= 8, and the 5669 bound for 2n = 10.
_HERMITE_TABLE = {
    2: Fraction(4, 3),
    4: Fraction(4),
    6: Fraction(64, 3),
    8: Fraction(256),
    10: Fraction(5669),
}


def hermite_upper_bound(two_n: int) -> HermiteBound:
    """Upper bound B on gamma_{two_n}, returned as bound_pow >= B**two_n.

    Table values through dimension 10; beyond that the classical linear
    bound gamma_n <= 2n/3 (conservative, keeps eliminations sound).
    """
    if two_n <= 0 or two_n % 2:
        raise ValueError("dimension must be a positive even integer")
    if two_n in _HERMITE_TABLE:
        return HermiteBound(two_n, _HERMITE_TABLE[two_n])
    return HermiteBound(two_n, Fraction(2 * two_n, 3) ** two_n)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n| (n != 0)."""
    fac = factor_integer(n)
    if not fac.complete:
        raise ValueError("divisor enumeration needs a complete factorization")
    out = [1]
    for p, e in fac.factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def prime_power_split(q: int) -> tuple[int, int] | None:
    """(p, a) with q = p**a, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factor_integer(q)
    if len(fac.factors) != 1 or not fac.complete:
        return None
    return fac.factors[0]
