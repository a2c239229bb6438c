import pytest

import helpers
from weilsieve import intpoly, weil
from weilsieve.enumerate import (EnumConstraints, coefficient_interval,
                                 enumerate_real_weil, make_frame,
                                 place_count_interval)


def _coeff_sets(q, g, constraints=None):
    return {h.h for h in enumerate_real_weil(q, g, constraints)}


def test_degree_one_over_f2():
    assert _coeff_sets(2, 1) == {(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1)}


def test_defect_zero_genus_two_f2_is_empty():
    # The sole shape candidate (x+2)^2 has a_2 = -1.
    assert _coeff_sets(2, 2, EnumConstraints(
        max_defect=0, require_nonneg_places_to=2)) == set()


def test_oracle_equivalence_small():
    got = _coeff_sets(2, 2)
    assert got == helpers.brute_force_real_weil(2, 2)


def test_coefficient_interval_depth_one():
    frame = make_frame(2, 1, ())
    lo, hi = coefficient_interval(frame)
    # Over-approximation that still verifies to exactly [-2, 2].
    assert lo <= -2 and hi >= 2
    admissible = [b for b in range(lo, hi + 1)
                  if intpoly.is_real_weil_shape([b, 1], 2)]
    assert admissible == [-2, -1, 0, 1, 2]


def test_coefficient_interval_contains_f8_fixture():
    frame = make_frame(8, 4, (13,))
    lo, hi = coefficient_interval(frame)
    assert lo <= 58 <= hi


def test_invalid_frame_gives_no_interval():
    # Prefix 13 at q=2 makes the partial polynomial fail real-rootedness.
    frame = make_frame(2, 2, (13,))
    assert not frame.valid
    assert coefficient_interval(frame) is None


def test_place_count_interval_cuts():
    # q=2, g=2, prefix (4): a_2 >= 0 forces b_2 >= 5.
    frame = make_frame(2, 2, (4,))
    iv = place_count_interval(frame, EnumConstraints(require_nonneg_places_to=2))
    assert iv is None or iv[0] >= 5
    # Exact point count pins b_1 = N - q - 1.
    frame1 = make_frame(7, 4, ())
    iv1 = place_count_interval(frame1, EnumConstraints(exact_point_count=25))
    assert iv1 == (17, 17)
    # Unconstrained: identical to the coefficient interval.
    assert place_count_interval(frame1, EnumConstraints()) == \
        coefficient_interval(frame1)


def test_rigato_candidate_present():
    got = _coeff_sets(7, 4, EnumConstraints(exact_point_count=25,
                                            require_nonneg_places_to=8))
    target = intpoly.poly_mul([2, 1], intpoly.poly_pow([5, 1], 3))
    assert tuple(target) in got


def test_emitted_candidates_satisfy_constraints():
    cons = EnumConstraints(require_nonneg_places_to=6)
    out = list(enumerate_real_weil(2, 3, cons))
    assert out
    seen = set()
    for h in out:
        assert h.h not in seen  # no duplicates
        seen.add(h.h)
        assert intpoly.is_real_weil_shape(h.coeffs, 2)
        profile = weil.point_counts(h, 6)
        assert all(profile.a(n) >= 0 for n in range(1, 7))
    # Lexicographic emission order in (b_1, b_2, ...).
    keys = [tuple(reversed(h.h[:-1])) for h in out]
    assert keys == sorted(keys)


def test_defect_two_patterns_f4_genus3():
    # Small-defect classes land on a fixed list of translated shapes
    # H(x + m) with m = floor(2*sqrt(q)) = 4.
    m = 4
    shapes = [
        [0, 0, 0, 1],
        intpoly.poly_mul([0, 0, 1], [-1, 1]),
        intpoly.poly_mul([0, 1], [-1, -1, 1]),
        intpoly.poly_mul([0, 0, 1], [-2, 1]),
        intpoly.poly_mul([0, 1], intpoly.poly_mul([-1, 1], [-1, 1])),
        intpoly.poly_mul([0, 1], [-1, -2, 1]),
        intpoly.poly_mul([0, 1], [-2, -2, 1]),
        intpoly.poly_mul([-1, 1], [-1, -1, 1]),
        [1, -1, -2, 1],
    ]
    patterns = {tuple(intpoly.compose_linear(H, 1, m)) for H in shapes}
    emitted = list(enumerate_real_weil(4, 3, EnumConstraints(max_defect=2)))
    assert emitted
    for h in emitted:
        assert weil.defect(h) <= 2
        assert h.h in patterns, h.h


def test_pruning_soundness_against_oracle():
    # Constrained enumeration equals the filtered brute-force set.
    oracle = helpers.brute_force_real_weil(3, 2)
    cons = EnumConstraints(require_nonneg_places_to=2, max_defect=4)
    expected = set()
    for h in oracle:
        cand = weil.RealWeilPoly(h, 3, 2)
        if weil.defect(cand) > 4:
            continue
        profile = weil.point_counts(cand, 2)
        if profile.a(1) >= 0 and profile.a(2) >= 0:
            expected.add(h)
    assert _coeff_sets(3, 2, cons) == expected


def test_input_validation():
    with pytest.raises(ValueError):
        list(enumerate_real_weil(6, 2))
    with pytest.raises(ValueError):
        list(enumerate_real_weil(2, 0))
