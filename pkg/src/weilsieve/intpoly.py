"""Exact integer polynomial arithmetic.

Polynomials are plain lists of Python ints in ascending degree order with a
nonzero trailing coefficient ([] is the zero polynomial).  On top of the
ring operations this module provides Sturm chains for exact real-root
counting, Sylvester resultants, reduced resultants through a Hermite normal
form, radicals, and a factorization routine specialized to monic
polynomials whose roots are all real and bounded by 2*sqrt(q).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

IntPoly = list[int]


class CommonFactorError(ValueError):
    """Raised when an operation requires coprime inputs but resultant is 0."""


def normalize(coeffs: Iterable[int]) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(f: Sequence[int]) -> int:
    """Degree, with the zero polynomial mapped to -1."""
    return len(f) - 1


def is_zero(f: Sequence[int]) -> bool:
    return len(f) == 0


def leading(f: Sequence[int]) -> int:
    return f[-1] if f else 0


def is_monic(f: Sequence[int]) -> bool:
    return bool(f) and f[-1] == 1


def poly_add(f: Sequence[int], g: Sequence[int]) -> IntPoly:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return normalize(out)


def poly_sub(f: Sequence[int], g: Sequence[int]) -> IntPoly:
    return poly_add(f, [-c for c in g])


def poly_neg(f: Sequence[int]) -> IntPoly:
    return [-c for c in f]


def poly_scale(f: Sequence[int], k: int) -> IntPoly:
    if k == 0:
        return []
    return [c * k for c in f]


def poly_mul(f: Sequence[int], g: Sequence[int]) -> IntPoly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def poly_pow(f: Sequence[int], e: int) -> IntPoly:
    out: IntPoly = [1]
    base = normalize(f)
    for _ in range(e):
        out = poly_mul(out, base)
    return out


def poly_from_roots(roots: Iterable[int]) -> IntPoly:
    out: IntPoly = [1]
    for r in roots:
        out = poly_mul(out, [-r, 1])
    return out


def derivative(f: Sequence[int]) -> IntPoly:
    return normalize([i * c for i, c in enumerate(f)][1:])


def eval_int(f: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def eval_fraction(f: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def sign_at(f: Sequence[int], x: Fraction | int) -> int:
    """Sign of f(x) computed in integers (no Fraction churn in hot loops)."""
    if isinstance(x, int):
        v = eval_int(f, x)
    else:
        # Horner with cleared denominators: f(n/d) * d**deg, same sign.
        num, den = x.numerator, x.denominator
        v = 0
        d = 1
        for c in reversed(f):
            v = v * num + c * d
            d *= den
    return (v > 0) - (v < 0)


def eval_on_interval(f: Sequence[int], lo: Fraction,
                     hi: Fraction) -> tuple[Fraction, Fraction]:
    """Interval-arithmetic Horner bound for f over [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    # Clear to a common denominator and run Horner in plain integers;
    # after step i the pair (a, b) is scaled by den**i.
    den = lo.denominator * hi.denominator // math.gcd(lo.denominator,
                                                      hi.denominator)
    nlo = lo.numerator * (den // lo.denominator)
    nhi = hi.numerator * (den // hi.denominator)
    a = b = 0
    scale = 1
    for c in reversed(f):
        p1, p2, p3, p4 = a * nlo, a * nhi, b * nlo, b * nhi
        scale *= den
        cs = c * scale
        a = min(p1, p2, p3, p4) + cs
        b = max(p1, p2, p3, p4) + cs
    return Fraction(a, scale), Fraction(b, scale)


def content(f: Sequence[int]) -> int:
    g = 0
    for c in f:
        g = math.gcd(g, c)
    return g


def primitive(f: Sequence[int]) -> IntPoly:
    """Divide out the content, preserving the leading sign."""
    c = content(f)
    if c == 0:
        return []
    return [x // c for x in f]


def poly_divmod_exact_lc(f: Sequence[int], g: Sequence[int]) -> tuple[IntPoly, IntPoly] | None:
    """Integer quotient and remainder of f by monic g."""
    if not is_monic(g):
        raise ValueError("divisor must be monic")
    rem = list(f)
    dq = len(f) - len(g)
    if dq < 0:
        return [], normalize(rem)
    quot = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + len(g) - 1]
        quot[i] = c
        if c:
            for j, gc in enumerate(g):
                rem[i + j] -= c * gc
    return normalize(quot), normalize(rem[: len(g) - 1])


def divide_exact(f: Sequence[int], g: Sequence[int]) -> IntPoly:
    """f // g for monic g, raising if the division is not exact."""
    q, r = poly_divmod_exact_lc(f, g)
    if r:
        raise ValueError("division is not exact")
    return q


def divides(g: Sequence[int], f: Sequence[int]) -> IntPoly | None:
    """Quotient f/g when monic g divides f exactly, else None."""
    q, r = poly_divmod_exact_lc(f, g)
    return None if r else q


def _pseudo_rem_signed(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """Remainder of lc(b)^k * a by b with k even, so the sign of the true
    rational remainder is preserved."""
    k = len(a) - len(b) + 1
    if k % 2:
        k += 1
    lc = b[-1] ** k
    rem = [c * lc for c in a]
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        c = rem[-1]
        # rem -= (c / lc(b)) x^shift * b; the scaling above makes every
        # such step exact.
        q, sr = divmod(c, b[-1])
        assert sr == 0
        for j, gc in enumerate(b):
            rem[shift + j] -= q * gc
        rem = normalize(rem)
    return normalize(rem)


def primitive_gcd(f: Sequence[int], g: Sequence[int]) -> IntPoly:
    """Primitive gcd in Z[x] with positive leading coefficient."""
    a, b = primitive(normalize(f)), primitive(normalize(g))
    if not a:
        return [abs(c) for c in b] if degree(b) < 1 else (b if b[-1] > 0 else poly_neg(b))
    if not b:
        return a if a[-1] > 0 else poly_neg(a)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem_signed(a, b)
        a, b = b, primitive(r)
    if a[-1] < 0:
        a = poly_neg(a)
    return a


def radical(f: Sequence[int]) -> IntPoly:
    """Product of the distinct monic irreducible factors of a monic f."""
    f = normalize(f)
    if not is_monic(f):
        raise ValueError("radical requires a monic polynomial")
    if degree(f) <= 1:
        return list(f)
    d = primitive_gcd(f, derivative(f))
    if d[-1] != 1:
        if any(c % d[-1] for c in d):
            raise ArithmeticError("gcd of a monic polynomial is not monic")
        d = [c // d[-1] for c in d]
    return divide_exact(f, d)


def squarefree_part(f: Sequence[int]) -> IntPoly:
    """Radical up to sign for an arbitrary nonzero integer polynomial."""
    f = primitive(normalize(f))
    if degree(f) <= 1:
        return f
    d = primitive_gcd(f, derivative(f))
    if degree(d) == 0:
        return f
    # lc(d)^k * f is exactly divisible by d in Z[x]; strip content after.
    db = degree(d)
    k = len(f) - db
    lc = d[-1] ** k
    rem = [c * lc for c in f]
    quot = [0] * k
    for i in range(k - 1, -1, -1):
        c, sr = divmod(rem[i + db], d[-1])
        assert sr == 0
        quot[i] = c
        for j, gc in enumerate(d):
            rem[i + j] -= c * gc
    return primitive(normalize(quot))


# ---------------------------------------------------------------------------
# Sturm chains


def sturm_chain(f: Sequence[int]) -> list[IntPoly]:
    """Integer Sturm chain of a squarefree f (content-stripped each step)."""
    chain = [primitive(normalize(f))]
    d = derivative(chain[0])
    if d:
        chain.append(primitive(d))
    while len(chain[-1]) > 0 and degree(chain[-1]) > 0:
        r = _pseudo_rem_signed(chain[-2], chain[-1])
        if not r:
            break
        chain.append(primitive(poly_neg(r)))
    return chain


def _variations(signs: Iterable[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _sign_at_neg_inf(f: Sequence[int]) -> int:
    s = (f[-1] > 0) - (f[-1] < 0)
    return s if degree(f) % 2 == 0 else -s


def _sign_at_pos_inf(f: Sequence[int]) -> int:
    return (f[-1] > 0) - (f[-1] < 0)


def _chain_variations(chain: list[IntPoly], x) -> int:
    if x == "-inf":
        return _variations(_sign_at_neg_inf(p) for p in chain if p)
    if x == "+inf":
        return _variations(_sign_at_pos_inf(p) for p in chain if p)
    return _variations(sign_at(p, x) for p in chain if p)


def count_real_roots_in(f: Sequence[int], interval) -> int:
    """Distinct real roots of f strictly inside the interval.

    The interval is a pair whose entries are exact rationals (int or
    Fraction) or the strings "-inf"/"+inf".  Multiplicities are ignored:
    the count is taken on the squarefree part.
    """
    lo, hi = interval
    if lo != "-inf" and hi != "+inf" and Fraction(lo) >= Fraction(hi):
        raise ValueError("degenerate interval")
    f = normalize(f)
    if not f:
        raise ValueError("zero polynomial has every point as a root")
    if degree(f) == 0:
        return 0
    sf = squarefree_part(f)
    chain = sturm_chain(sf)
    n = _chain_variations(chain, lo) - _chain_variations(chain, hi)
    if hi != "+inf" and sign_at(sf, Fraction(hi)) == 0:
        n -= 1  # Sturm counts (lo, hi]; the query is open at hi
    return n


def count_distinct_real_roots(f: Sequence[int]) -> int:
    return count_real_roots_in(f, ("-inf", "+inf"))


# ---------------------------------------------------------------------------
# Resultants


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    m, n = degree(f), degree(g)
    size = m + n
    rows = []
    fd = list(reversed(f))
    gd = list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for j in range(m):
        rows.append([0] * j + gd + [0] * (size - n - 1 - j))
    return rows


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free determinant; mutates its argument."""
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, n):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[-1][-1]


def resultant(f: Sequence[int], g: Sequence[int]) -> int:
    f, g = normalize(f), normalize(g)
    if not f or not g:
        raise ValueError("resultant of the zero polynomial is undefined")
    if degree(f) == 0:
        return f[0] ** degree(g)
    if degree(g) == 0:
        return g[0] ** degree(f)
    return _bareiss_det(sylvester_matrix(f, g))


def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Row-style HNF (upper triangular, positive pivots) of an integer
    matrix given as a list of rows; returns the reduced nonzero rows."""
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    r = 0
    for col in range(ncols):
        live = [i for i in range(r, len(mat)) if mat[i][col] != 0]
        if not live:
            continue
        # Euclidean reduction within the column until one nonzero survives.
        while True:
            live = [i for i in range(r, len(mat)) if mat[i][col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: abs(mat[i][col]))
            p = live[0]
            for i in live[1:]:
                qn = mat[i][col] // mat[p][col]
                for j in range(ncols):
                    mat[i][j] -= qn * mat[p][j]
        p = live[0] if live else None
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        if mat[r][col] < 0:
            mat[r] = [-x for x in mat[r]]
        for i in range(r):
            qn = mat[i][col] // mat[r][col]
            if qn:
                for j in range(ncols):
                    mat[i][j] -= qn * mat[r][j]
        r += 1
    return mat[:r]


def reduced_resultant(f: Sequence[int], g: Sequence[int]) -> int:
    """Positive generator of (f, g) intersected with the integers.

    Computed as the last pivot of the Hermite normal form of the lattice
    spanned by the Sylvester coefficient rows, with the constant column
    placed last.  Inputs sharing a factor are rejected.
    """
    f, g = normalize(f), normalize(g)
    if not f or not g:
        raise ValueError("reduced resultant of the zero polynomial is undefined")
    if degree(f) == 0 or degree(g) == 0:
        c = abs(f[0]) if degree(f) == 0 else abs(g[0])
        if c == 0:
            raise CommonFactorError("inputs share a common factor")
        return c if c > 0 else c
    rows = sylvester_matrix(f, g)
    hnf = hermite_normal_form(rows)
    size = degree(f) + degree(g)
    if len(hnf) < size:
        raise CommonFactorError("inputs share a common factor (resultant 0)")
    return hnf[-1][-1]


# ---------------------------------------------------------------------------
# The real-Weil shape test and factorization


def compose_linear(f: Sequence[int], a: int, b: int) -> IntPoly:
    """f(a*x + b)."""
    out: IntPoly = []
    lin = [b, a]
    for c in reversed(f):
        out = poly_add(poly_mul(out, lin), [c])
    return normalize(out)


def mirror(f: Sequence[int]) -> IntPoly:
    """f(-x), sign-normalized to keep the leading coefficient's sign."""
    return normalize([c if i % 2 == 0 else -c for i, c in enumerate(f)])


def root_square_transform(f: Sequence[int]) -> IntPoly:
    """For f with roots r_i, the polynomial with roots r_i**2.

    Built from f(x) * f(-x) = (-1)^deg(f) * G(x^2).
    """
    f = normalize(f)
    prod = poly_mul(f, mirror(f))
    if degree(f) % 2:
        prod = poly_neg(prod)
    assert all(c == 0 for i, c in enumerate(prod) if i % 2)
    return normalize(prod[0::2])


def is_real_weil_shape(h: Sequence[int], q: int) -> bool:
    """True iff every root of h is real with absolute value at most 2*sqrt(q).

    The bound is enforced exactly through the root-square transform, which
    turns the irrational threshold 2*sqrt(q) into the rational one 4q.
    """
    h = normalize(h)
    if not is_monic(h):
        raise ValueError("real Weil shape is defined for monic polynomials")
    if degree(h) == 0:
        return True
    sf = squarefree_part(h)
    if count_distinct_real_roots(sf) != degree(sf):
        return False
    g = root_square_transform(sf)
    return count_real_roots_in(g, (4 * q, "+inf")) == 0


def factor_monic_real_weil(h: Sequence[int], q: int) -> list[tuple[IntPoly, int]]:
    """Irreducible factorization over Z of a monic real-Weil-shaped h.

    Trial division against the enumerated degree-k candidates (smallest
    degree first), which is exhaustive because every monic integer factor
    of h inherits the root bound.
    """
    from . import enumerate as enum_mod

    h = normalize(h)
    if not is_real_weil_shape(h, q):
        raise ValueError("input is not real-Weil-shaped for this q")
    factors: list[tuple[IntPoly, int]] = []
    rem = list(h)
    # Strip the x factor first so constant-term filtering is available.
    mult = 0
    while rem and rem[0] == 0:
        rem = rem[1:]
        mult += 1
    if mult:
        factors.append(([0, 1], mult))
    k = 1
    while degree(rem) >= 2 * k:
        h0, h1, hm1 = rem[0], eval_int(rem, 1), eval_int(rem, -1)
        progressed = False
        for cand in enum_mod.real_weil_candidates(q, k):
            if cand[0] == 0 or h0 % cand[0]:
                continue
            if h1 and eval_int(cand, 1) and h1 % eval_int(cand, 1):
                continue
            if hm1 and eval_int(cand, -1) and hm1 % eval_int(cand, -1):
                continue
            e = 0
            while True:
                quot = divides(cand, rem)
                if quot is None:
                    break
                rem = quot
                e += 1
            if e:
                factors.append((list(cand), e))
                progressed = True
                if degree(rem) < 2 * k:
                    break
                h0, h1, hm1 = rem[0], eval_int(rem, 1), eval_int(rem, -1)
        if not progressed:
            k += 1
    if degree(rem) >= 1:
        factors.append((rem, 1))
    factors.sort(key=lambda fe: (degree(fe[0]), fe[0]))
    return factors
