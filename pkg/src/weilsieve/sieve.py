"""Elimination and deduction tests for real Weil polynomial candidates.

Each test inspects one candidate and returns a TestOutcome whose status is
one of: eliminated, deduction, pp_exists, no_pp, inapplicable, unknown.
Certificates are plain JSON-friendly dicts carrying enough data to replay
the conclusion.  run_pipeline chains the tests in cost order and produces a
SieveReport with the final verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import arith, intpoly, modpoly, numfield, weil
from .intpoly import IntPoly
from .weil import PlaceCountProfile, RealWeilPoly, WeilPoly, real_to_weil, weil_to_real

ELIMINATED = "ELIMINATED"
CONSTRAINED = "CONSTRAINED"
OPEN = "OPEN"


@dataclass(frozen=True)
class TestOutcome:
    test_name: str
    status: str  # eliminated | deduction | pp_exists | no_pp | inapplicable | unknown
    certificate: dict


@dataclass(frozen=True)
class SieveReport:
    candidate: RealWeilPoly
    profile: PlaceCountProfile
    verdict: str
    outcomes: tuple[TestOutcome, ...]


@dataclass(frozen=True)
class SieveConfig:
    horizon: int | None = None      # default 2g
    exhaustive: bool = False
    tests: tuple[str, ...] | None = None
    effort: int = arith.DEFAULT_BUDGET


def _poly_list(p) -> list[int]:
    return list(p)


def _factor_blocks(h: RealWeilPoly) -> list[tuple[IntPoly, int]]:
    return intpoly.factor_monic_real_weil(h.coeffs, h.q)


def _coprime_splits(blocks: list[tuple[IntPoly, int]]):
    """Yield (side1, side2) partitions of irreducible-power blocks; the
    first block always stays on side 1, so each split appears once."""
    k = len(blocks)
    for mask in range((1 << (k - 1)) - 1):
        side1 = [blocks[0]]
        side2 = []
        for i in range(1, k):
            (side1 if (mask >> (i - 1)) & 1 else side2).append(blocks[i])
        yield side1, side2


def _expand(side: list[tuple[IntPoly, int]]) -> IntPoly:
    out: IntPoly = [1]
    for p, m in side:
        out = intpoly.poly_mul(out, intpoly.poly_pow(p, m))
    return out


def _radical_of(side: list[tuple[IntPoly, int]]) -> IntPoly:
    out: IntPoly = [1]
    for p, _m in side:
        out = intpoly.poly_mul(out, p)
    return out


def _elliptic_counts(t: int, q: int, horizon: int) -> list[int]:
    """#E(F_{q^n}) for a trace-t elliptic curve, n = 1..horizon."""
    s0, s1 = 2, t
    out = []
    for n in range(1, horizon + 1):
        if n == 1:
            s = t
        else:
            s = t * s1 - q * s0
            s0, s1 = s1, s
        out.append(q**n + 1 - s)
    return out


# ---------------------------------------------------------------------------
# Tests


def test_nonneg_places(h: RealWeilPoly, horizon: int) -> TestOutcome:
    profile = weil.point_counts(h, horizon)
    for n in range(1, horizon + 1):
        if profile.a(n) < 0:
            return TestOutcome("nonneg_places", "eliminated", {
                "n": n,
                "a_n": profile.a(n),
                "N_n": profile.N(n),
                "point_counts": list(profile.point_counts[:n]),
            })
    return TestOutcome("nonneg_places", "unknown", {"checked_to": horizon})


def test_resultant1(h: RealWeilPoly) -> TestOutcome:
    blocks = _factor_blocks(h)
    if len(blocks) < 2:
        return TestOutcome("resultant1", "inapplicable",
                           {"reason": "irreducible-power real Weil polynomial"})
    splits = []
    for side1, side2 in _coprime_splits(blocks):
        r = intpoly.reduced_resultant(_radical_of(side1), _radical_of(side2))
        entry = {
            "h1": _expand(side1),
            "h2": _expand(side2),
            "reduced_resultant": r,
        }
        if r == 1:
            return TestOutcome("resultant1", "eliminated", entry)
        splits.append(entry)
    return TestOutcome("resultant1", "unknown", {"splits": splits})


def _quotient_feasible(h: RealWeilPoly, hq_coeffs: IntPoly, horizon: int,
                       profile: PlaceCountProfile) -> tuple[bool, str]:
    gq = intpoly.degree(hq_coeffs)
    if 2 * gq > h.g + 1:
        return False, f"quotient genus {gq} exceeds (g+1)/2"
    hq = RealWeilPoly(tuple(hq_coeffs), h.q, gq)
    qprof = weil.point_counts(hq, horizon)
    for n in range(1, horizon + 1):
        if qprof.a(n) < 0:
            return False, f"quotient has a_{n} = {qprof.a(n)} < 0"
        if profile.N(n) > 2 * qprof.N(n):
            return False, (f"#C(F_q^{n}) = {profile.N(n)} exceeds "
                           f"2#D = {2 * qprof.N(n)}")
    return True, "feasible"


def test_resultant2(h: RealWeilPoly, horizon: int) -> TestOutcome:
    blocks = _factor_blocks(h)
    if len(blocks) < 2:
        return TestOutcome("resultant2", "inapplicable",
                           {"reason": "irreducible-power real Weil polynomial"})
    profile = weil.point_counts(h, horizon)
    deductions = []
    for side1, side2 in _coprime_splits(blocks):
        r = intpoly.reduced_resultant(_radical_of(side1), _radical_of(side2))
        if r != 2:
            continue
        entry = {"h1": _expand(side1), "h2": _expand(side2),
                 "reduced_resultant": 2, "options": []}
        any_ok = False
        for label, side in (("h1", side1), ("h2", side2)):
            ok, why = _quotient_feasible(h, _expand(side), horizon, profile)
            entry["options"].append({"quotient": label, "feasible": ok,
                                     "detail": why})
            any_ok = any_ok or ok
        if not any_ok:
            return TestOutcome("resultant2", "eliminated", entry)
        deductions.append(entry)
    if deductions:
        return TestOutcome("resultant2", "deduction", {"splits": deductions})
    return TestOutcome("resultant2", "unknown",
                       {"reason": "no coprime split with reduced resultant 2"})


def test_supersingular_factor(h: RealWeilPoly,
                              effort: int = arith.DEFAULT_BUDGET) -> TestOutcome:
    s0 = arith.isqrt_exact(h.q)
    if s0 is None:
        return TestOutcome("supersingular_factor", "inapplicable",
                           {"reason": "q is not a square"})
    budget_hit = False
    for s in (s0, -s0):
        rem = h.coeffs
        n = 0
        while True:
            quot = intpoly.divides([-2 * s, 1], rem)
            if quot is None:
                break
            rem = quot
            n += 1
        if n == 0 or intpoly.degree(rem) < 1:
            continue
        h0 = rem
        if math.gcd(h0[0], h.q) != 1:
            continue
        value = intpoly.eval_int(h0, 2 * s)
        sq = arith.is_squarefree(value, effort)
        if sq == "yes":
            return TestOutcome("supersingular_factor", "eliminated", {
                "s": s, "n": n, "h0": h0, "h0_at_2s": value,
                "squarefree": True,
            })
        if sq == "unknown":
            budget_hit = True
    if budget_hit:
        return TestOutcome("supersingular_factor", "unknown",
                           {"reason": "factorization budget exhausted"})
    return TestOutcome("supersingular_factor", "inapplicable",
                       {"reason": "no qualifying supersingular factor"})


def test_surface_rules(h: RealWeilPoly) -> TestOutcome:
    q, g = h.q, h.g
    if g == 3:
        b1, b2, b3 = h.h[2], h.h[1], h.h[0]
        t = -b1 // 3 if b1 % 3 == 0 else None
        if t is not None and list(h.h) == intpoly.poly_from_roots([t, t, t]):
            delta = t * t - 4 * q
            if delta in (-3, -4, -8, -11):
                return TestOutcome("surface_rules", "eliminated", {
                    "pattern": "cube of linear factor",
                    "t": t, "t2_minus_4q": delta,
                })
        return TestOutcome("surface_rules", "unknown",
                           {"reason": "no genus-3 rule applies"})
    if g != 2:
        return TestOutcome("surface_rules", "inapplicable",
                           {"reason": "rules cover genus 2 and 3 only"})
    b1, b2 = h.h[1], h.h[0]
    a, b = b1, b2 + 2 * q
    if b2 == -(4 * q - 1) and b1 == 0:
        return TestOutcome("surface_rules", "eliminated", {
            "pattern": "x^4 + (1-2q)x^2 + q^2", "a": a, "b": b,
        })
    if q % 2 == 1 and b2 == -(4 * q - 2) and b1 == 0:
        return TestOutcome("surface_rules", "eliminated", {
            "pattern": "x^4 + (2-2q)x^2 + q^2 (q odd)", "a": a, "b": b,
        })
    if b1 % 2 == 0:
        t = -b1 // 2
        if list(h.h) == intpoly.poly_from_roots([t, t]):
            delta = t * t - 4 * q
            if delta in (-3, -4, -7):
                return TestOutcome("surface_rules", "eliminated", {
                    "pattern": "square of linear factor",
                    "t": t, "t2_minus_4q": delta,
                })
    if b < 0 and a * a - b == q:
        fac = arith.factor_integer(b)
        if fac.complete and all(p % 3 == 1 for p, _ in fac.factors):
            return TestOutcome("surface_rules", "no_pp", {
                "a": a, "b": b, "prime_divisors": [p for p, _ in fac.factors],
            })
    return TestOutcome("surface_rules", "unknown",
                       {"reason": "no genus-2 rule applies"})


# -- the principal polarization test ----------------------------------------


def _local_witness_odd(h: RealWeilPoly, p: int, vN: int) -> tuple[str, dict]:
    """Analysis of delta = y^2 - 4q at primes of K+ above an odd p.

    Returns ('witness'|'none'|'inconclusive', detail)."""
    sd = numfield.splitting_data(h, p)
    if not sd.usable:
        return "inconclusive", {"p": p, "reason": "p^2 divides disc(h)"}
    delta = [-4 * h.q, 0, 1]
    M = 2 * vN + 3
    pM = p**M
    for (fac, d), mult in zip(sd.factors, sd.multiplicities):
        fac = list(fac)
        dbar = modpoly.mod_divmod(delta, fac, p)[1]
        if dbar:
            continue  # delta is a unit at this prime: no witness here
        if mult >= 2:
            return "inconclusive", {"p": p, "factor": fac,
                                    "reason": "ramified residue factor"}
        A, _B = modpoly.hensel_lift_factor(h.coeffs, fac, p, M)
        dloc = modpoly.mod_divmod(delta, A, pM)[1]
        if not dloc:
            return "inconclusive", {"p": p, "factor": fac,
                                    "reason": "valuation exceeds precision"}
        v = min(_p_val(c, p) for c in dloc if c)
        if v >= M - 1:
            return "inconclusive", {"p": p, "factor": fac,
                                    "reason": "valuation exceeds precision"}
        if v % 2 == 1:
            return "witness", {"p": p, "factor": fac, "valuation": v,
                               "kind": "ramified in K/K+"}
        ubar = modpoly.mod_normalize([c // p**v for c in dloc], p)
        powed = modpoly.mod_pow(ubar, (p**d - 1) // 2, fac, p)
        if powed == [p - 1]:
            return "witness", {"p": p, "factor": fac, "valuation": v,
                               "kind": "inert prime divides pi - pibar"}
        if powed != [1]:
            return "inconclusive", {"p": p, "factor": fac,
                                    "reason": "unit part not invertible"}
    return "none", {"p": p}


def _p_val(c: int, p: int) -> int:
    v = 0
    while c % p == 0:
        v += 1
        c //= p
    return v


def _local_witness_two(h: RealWeilPoly, vN: int) -> tuple[str, dict]:
    """2-adic analysis via square lifting modulo 8."""
    sd = numfield.splitting_data(h, 2)
    if not sd.usable:
        return "inconclusive", {"p": 2, "reason": "4 divides disc(h)"}
    delta = [-4 * h.q, 0, 1]
    M = 2 * vN + 5
    mod8 = 8
    for (fac, d), mult in zip(sd.factors, sd.multiplicities):
        fac = list(fac)
        dbar = modpoly.mod_divmod(delta, fac, 2)[1]
        if dbar:
            continue
        if mult >= 2:
            return "inconclusive", {"p": 2, "factor": fac,
                                    "reason": "ramified residue factor"}
        A, _B = modpoly.hensel_lift_factor(h.coeffs, fac, 2, M)
        dloc = modpoly.mod_divmod(delta, A, 2**M)[1]
        if not dloc:
            return "inconclusive", {"p": 2, "factor": fac,
                                    "reason": "valuation exceeds precision"}
        v = min(_p_val(c, 2) for c in dloc if c)
        if v >= M - 3:
            return "inconclusive", {"p": 2, "factor": fac,
                                    "reason": "valuation exceeds precision"}
        if v % 2 == 1:
            return "witness", {"p": 2, "factor": fac, "valuation": v,
                               "kind": "ramified in K/K+"}
        u = [c // 2**v for c in dloc]
        A8 = modpoly.mod_normalize(A, mod8)
        u8 = modpoly.mod_divmod(u, A8, mod8)[1]
        u4 = modpoly.mod_normalize(u8, 4)
        # Squares modulo 4 are exactly the squares of residue representatives.
        root = None
        for bits in range(1, 1 << d):
            x = [(bits >> i) & 1 for i in range(d)]
            x2 = modpoly.mod_divmod(modpoly.mod_mul(x, x, 4), A8, 4)[1]
            if x2 == u4:
                root = x
                break
        if root is None:
            return "witness", {"p": 2, "factor": fac, "valuation": v,
                               "kind": "ramified in K/K+ (2-adic)"}
        x2_8 = modpoly.mod_divmod(modpoly.mod_mul(root, root, mod8), A8, mod8)[1]
        inv = _invert_mod8(x2_8, A8, fac)
        w = modpoly.mod_divmod(modpoly.mod_mul(u8, inv, mod8), A8, mod8)[1]
        wm1 = modpoly.mod_sub(w, [1], mod8)
        if any(c % 4 for c in wm1):
            return "inconclusive", {"p": 2, "factor": fac,
                                    "reason": "square lifting failed"}
        t = modpoly.mod_normalize([c // 4 for c in wm1], 2)
        tr = modpoly.gf_trace_to_prime_field(t, fac, 2)
        if tr == 1:
            return "witness", {"p": 2, "factor": fac, "valuation": v,
                               "kind": "inert prime divides pi - pibar"}
    return "none", {"p": 2}


def _invert_mod8(e: list[int], A8: list[int], fac2: list[int]) -> list[int]:
    """Inverse of a unit in (Z/8)[y]/(A8), by lifting the GF(2) inverse."""
    g, s, _t = modpoly.gf_ext_euclid(e, fac2, 2)
    if g != [1]:
        raise ZeroDivisionError("element is not a unit modulo 2")
    inv = s
    for _ in range(2):
        prod = modpoly.mod_divmod(modpoly.mod_mul(e, inv, 8), A8, 8)[1]
        two_minus = modpoly.mod_sub([2], prod, 8)
        inv = modpoly.mod_divmod(modpoly.mod_mul(inv, two_minus, 8), A8, 8)[1]
    return inv


def test_pp_ordinary_simple(h: RealWeilPoly) -> TestOutcome:
    blocks = _factor_blocks(h)
    if len(blocks) != 1 or blocks[0][1] != 1:
        return TestOutcome("pp_ordinary_simple", "inapplicable",
                           {"reason": "real Weil polynomial is reducible"})
    if not weil.is_ordinary(h):
        return TestOutcome("pp_ordinary_simple", "inapplicable",
                           {"reason": "class is not ordinary"})
    if h.g % 2 == 1:
        return TestOutcome("pp_ordinary_simple", "pp_exists",
                           {"reason": "odd-dimensional simple ordinary class"})
    f = real_to_weil(h)
    modulus = intpoly.radical(f.coeffs)
    pi = numfield.frobenius_element(modulus)
    pibar = numfield.verschiebung_element(modulus, h.q)
    nval = numfield.norm(pi - pibar)
    if nval.denominator != 1:
        raise ArithmeticError("norm of pi - pibar must be an integer")
    N = int(nval)
    s = arith.isqrt_exact(N)
    if s is None:
        return TestOutcome("pp_ordinary_simple", "pp_exists",
                           {"norm": N, "reason": "norm of pi - pibar is not a square"})
    nf = arith.factor_integer(N)
    if not nf.complete:
        return TestOutcome("pp_ordinary_simple", "unknown",
                           {"norm": N, "reason": "could not factor the norm"})
    witnesses = []
    inconclusive = []
    for p, e in nf.factors:
        if p == 2:
            kind, detail = _local_witness_two(h, e)
        else:
            kind, detail = _local_witness_odd(h, p, e)
        if kind == "witness":
            witnesses.append(detail)
        elif kind == "inconclusive":
            inconclusive.append(detail)
    if witnesses:
        return TestOutcome("pp_ordinary_simple", "pp_exists", {
            "norm": N, "s": s, "witness": witnesses[0],
        })
    if inconclusive:
        return TestOutcome("pp_ordinary_simple", "unknown", {
            "norm": N, "s": s, "obstructions": inconclusive,
        })
    p_char = arith.prime_power_split(h.q)[0]
    m = p_char if h.q % 2 == 1 else 4
    c_g = f.c(h.g)
    cert = {
        "norm": N, "s": s, "m": m,
        "c_g": c_g, "c_g_mod_m": c_g % m, "s_mod_m": s % m,
        "splitting_checked": [p for p, _ in nf.factors],
    }
    if c_g % m == s % m:
        return TestOutcome("pp_ordinary_simple", "pp_exists", cert)
    return TestOutcome("pp_ordinary_simple", "no_pp", cert)


# -- elliptic cover tests ----------------------------------------------------


def _linear_blocks(blocks):
    for p, mult in blocks:
        if intpoly.degree(p) == 1:
            yield -p[0], mult  # p = x - t


def test_elliptic_cover_divisor(h: RealWeilPoly, horizon: int) -> TestOutcome:
    blocks = _factor_blocks(h)
    profile = weil.point_counts(h, horizon)
    deductions = []
    notes = []
    for t, mult in _linear_blocks(blocks):
        if mult != 1:
            continue
        if not weil.admissible_elliptic_trace(t, h.q):
            notes.append({"t": t, "note": "trace not admissible"})
            continue
        h0 = intpoly.divides([-t, 1], h.coeffs)
        if intpoly.degree(h0) < 1:
            continue
        g0 = intpoly.radical(h0)
        r = abs(intpoly.eval_int(g0, t))
        ecounts = _elliptic_counts(t, h.q, horizon)
        feasible = []
        for d in arith.divisors(r):
            if d < 2:
                continue
            if all(profile.N(n) <= d * ecounts[n - 1]
                   for n in range(1, horizon + 1)):
                feasible.append(d)
        entry = {
            "t": t, "r": r,
            "elliptic_point_count": h.q + 1 - t,
            "feasible_degrees": feasible,
        }
        if not feasible:
            return TestOutcome("elliptic_cover_divisor", "eliminated", entry)
        deductions.append(entry)
    if deductions:
        return TestOutcome("elliptic_cover_divisor", "deduction",
                           {"covers": deductions})
    reason = {"reason": "no simple admissible elliptic factor"}
    if notes:
        reason["notes"] = notes
    return TestOutcome("elliptic_cover_divisor", "inapplicable", reason)


def test_elliptic_cover_bound(h: RealWeilPoly, horizon: int) -> TestOutcome:
    p_char = arith.prime_power_split(h.q)[0]
    blocks = _factor_blocks(h)
    profile = weil.point_counts(h, horizon)
    deductions = []
    notes = []
    for t, n in _linear_blocks(blocks):
        if t % p_char == 0:
            notes.append({"t": t, "note": "supersingular trace"})
            continue
        if not weil.admissible_elliptic_trace(t, h.q):
            notes.append({"t": t, "note": "trace not admissible"})
            continue
        h0 = h.coeffs
        for _ in range(n):
            h0 = intpoly.divides([-t, 1], h0)
        if intpoly.degree(h0) < 1:
            continue
        g0 = intpoly.radical(h0)
        r = abs(intpoly.eval_int(g0, t))
        b = math.gcd(r**n, abs(intpoly.eval_int(h0, t)))
        bound_pow = arith.hermite_upper_bound(2 * n).bound_pow
        rhs = bound_pow * b * b * Fraction(abs(t * t - 4 * h.q), 4) ** n
        ecounts = _elliptic_counts(t, h.q, horizon)
        feasible = []
        d = 2
        while Fraction(d ** (2 * n)) <= rhs:
            if all(profile.N(m) <= d * ecounts[m - 1]
                   for m in range(1, horizon + 1)):
                feasible.append(d)
            d += 1
        entry = {
            "t": t, "n": n, "r": r, "b": b,
            "bound_pow_2n": [rhs.numerator, rhs.denominator],
            "max_degree": d - 1,
            "feasible_degrees": feasible,
        }
        if not feasible:
            return TestOutcome("elliptic_cover_bound", "eliminated", entry)
        deductions.append(entry)
    if deductions:
        return TestOutcome("elliptic_cover_bound", "deduction",
                           {"covers": deductions})
    reason = {"reason": "no ordinary admissible elliptic factor"}
    if notes:
        reason["notes"] = notes
    return TestOutcome("elliptic_cover_bound", "inapplicable", reason)


# -- descent -----------------------------------------------------------------


def test_descent(h: RealWeilPoly, horizon: int) -> TestOutcome:
    p_char, a = arith.prime_power_split(h.q)
    exponents = [e for e in arith.divisors(a) if e > 1]
    if not exponents:
        return TestOutcome("descent", "inapplicable",
                           {"reason": "q is not a proper power"})
    if not weil.is_ordinary(h):
        return TestOutcome("descent", "inapplicable",
                           {"reason": "class is not ordinary"})
    f = real_to_weil(h)
    deductions = []
    for e in exponents:
        q0 = p_char ** (a // e)
        roots = numfield.eth_roots_of_frobenius(f, e, q0)
        if not roots:
            continue
        options = []
        all_fail = True
        for pi0, f0 in roots:
            variants = [f0]
            if e % 2 == 0:
                variants.append(intpoly.mirror(f0))
            for fv in variants:
                h0 = weil_to_real(WeilPoly(tuple(fv), q0, h.g))
                out = test_nonneg_places(h0, max(horizon, 2 * h.g))
                opt = {
                    "q0": q0, "e": e,
                    "descended_f": list(fv),
                    "descended_h": h0.coeffs,
                    "pi0": [[c.numerator, c.denominator]
                            for c in pi0.representative],
                    "fails_place_counts": out.status == "eliminated",
                }
                if out.status == "eliminated":
                    opt["failure"] = out.certificate
                else:
                    all_fail = False
                options.append(opt)
        if all_fail:
            return TestOutcome("descent", "eliminated", {
                "q0": q0, "e": e, "options": options,
            })
        deductions.append({"q0": q0, "e": e, "options": options})
    if deductions:
        return TestOutcome("descent", "deduction", {"descents": deductions})
    return TestOutcome("descent", "inapplicable",
                       {"reason": "no e-th root of Frobenius in the order"})


# -- automorphism-flavoured deductions ---------------------------------------


def test_cyclotomic_automorphism(h: RealWeilPoly) -> TestOutcome:
    blocks = _factor_blocks(h)
    power_of_one = len(blocks) == 1
    squarefree = all(m == 1 for _p, m in blocks)
    if not (power_of_one or squarefree):
        return TestOutcome("cyclotomic_automorphism", "inapplicable",
                           {"reason": "Weil polynomial is neither a power of "
                                      "one irreducible nor squarefree"})
    f = real_to_weil(h)
    found = numfield.roots_of_unity_in_order(f)
    orders = sorted({k for k, _z in found if k > 2})
    if not orders:
        return TestOutcome("cyclotomic_automorphism", "inapplicable",
                           {"reason": "only the roots of unity +-1 in the order"})
    examples = {}
    for k, z in found:
        if k > 2 and k not in examples:
            examples[k] = [[c.numerator, c.denominator] for c in z.representative]
    return TestOutcome("cyclotomic_automorphism", "deduction", {
        "orders": orders,
        "witness_elements": examples,
        "note": "any curve in this class has an automorphism of each listed "
                "order (possibly after multiplying by -1)",
    })


def test_splitting_annihilator(h: RealWeilPoly) -> TestOutcome:
    blocks = _factor_blocks(h)
    if len(blocks) < 2:
        return TestOutcome("splitting_annihilator", "inapplicable",
                           {"reason": "irreducible-power real Weil polynomial"})
    splits = []
    structural = 0
    for side1, side2 in _coprime_splits(blocks):
        r = intpoly.reduced_resultant(_radical_of(side1), _radical_of(side2))
        entry = {
            "h1": _expand(side1), "h2": _expand(side2),
            "annihilator": r,
            "structure": "0 -> Delta -> A1 x A2 -> A -> 0 with Delta "
                         "annihilated by the reported integer",
        }
        if r in (1, 2):
            entry["claimed_by"] = "resultant1" if r == 1 else "resultant2"
        else:
            structural += 1
        splits.append(entry)
    if structural:
        return TestOutcome("splitting_annihilator", "deduction",
                           {"splits": splits})
    return TestOutcome("splitting_annihilator", "inapplicable",
                       {"reason": "all splits claimed by resultant tests",
                        "splits": splits})


# ---------------------------------------------------------------------------
# Pipeline


_PIPELINE = (
    ("nonneg_places", lambda h, hz, eff: test_nonneg_places(h, hz)),
    ("resultant1", lambda h, hz, eff: test_resultant1(h)),
    ("surface_rules", lambda h, hz, eff: test_surface_rules(h)),
    ("supersingular_factor", lambda h, hz, eff: test_supersingular_factor(h, eff)),
    ("resultant2", lambda h, hz, eff: test_resultant2(h, hz)),
    ("elliptic_cover_divisor", lambda h, hz, eff: test_elliptic_cover_divisor(h, hz)),
    ("elliptic_cover_bound", lambda h, hz, eff: test_elliptic_cover_bound(h, hz)),
    ("cyclotomic_automorphism", lambda h, hz, eff: test_cyclotomic_automorphism(h)),
    ("splitting_annihilator", lambda h, hz, eff: test_splitting_annihilator(h)),
    ("descent", lambda h, hz, eff: test_descent(h, hz)),
    ("pp_ordinary_simple", lambda h, hz, eff: test_pp_ordinary_simple(h)),
)


def run_pipeline(h: RealWeilPoly, config: SieveConfig | None = None) -> SieveReport:
    config = config or SieveConfig()
    horizon = config.horizon or 2 * h.g
    profile = weil.point_counts(h, horizon)
    selected = set(config.tests) if config.tests is not None else None
    outcomes: list[TestOutcome] = []
    for name, runner in _PIPELINE:
        if selected is not None and name not in selected:
            continue
        outcome = runner(h, horizon, config.effort)
        outcomes.append(outcome)
        if outcome.status in ("eliminated", "no_pp") and not config.exhaustive:
            break
    if any(o.status in ("eliminated", "no_pp") for o in outcomes):
        verdict = ELIMINATED
    elif any(o.status == "deduction" for o in outcomes):
        verdict = CONSTRAINED
    else:
        verdict = OPEN
    return SieveReport(h, profile, verdict, tuple(outcomes))
