"""Cyclotomic ring and character-sum tests against independent oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fwcodes.charsum import (CyclotomicInteger, GaussSumValue, additive_char,
                             count_trace_square_equals,
                             gauss_formula_to_cyclotomic, gauss_product_over_q,
                             gauss_rational, gauss_sum_bruteforce,
                             gauss_sum_formula, orbit_representatives,
                             quadratic_completion_closed_form,
                             quadratic_completion_sum, set_char_sum)
from fwcodes.defsets import build_D
from fwcodes.gf import build_field, build_tower


def test_cyclotomic_canonicalization():
    # 1 + zeta + zeta^2 = 0 in Z[zeta_3]
    assert CyclotomicInteger.from_raw(3, (1, 1, 1)) == 0
    # zeta^2 = -1 - zeta
    assert CyclotomicInteger.from_raw(3, (0, 0, 1)).coeffs == (-1, -1)
    assert CyclotomicInteger.from_raw(5, (2, 0, 0, 0, 2)).coeffs == (0, -2, -2, -2)


def test_cyclotomic_root_powers_sum_to_zero():
    for p in (3, 5, 7):
        total = CyclotomicInteger.zero(p)
        for t in range(p):
            total = total + CyclotomicInteger.root_power(p, t)
        assert total == 0


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_cyclotomic_ring_axioms(p, data):
    coeff = st.integers(-9, 9)
    vec = st.lists(coeff, min_size=p - 1, max_size=p - 1)
    a = CyclotomicInteger(p, data.draw(vec))
    b = CyclotomicInteger(p, data.draw(vec))
    c = CyclotomicInteger(p, data.draw(vec))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == 0
    assert a * 1 == a and a * 0 == 0


def test_cyclotomic_rational_detection():
    v = CyclotomicInteger.from_int(3, -9)
    assert v.is_rational and v.rational_value() == -9
    w = CyclotomicInteger.root_power(3, 1)
    assert not w.is_rational
    with pytest.raises(ValueError):
        w.rational_value()


def test_gauss_sum_bruteforce_frozen():
    # G(F_3) = zeta - zeta^2 = 1 + 2*zeta in canonical coords
    assert gauss_sum_bruteforce(build_field(3, 1)).coeffs == (1, 2)
    assert gauss_sum_bruteforce(build_field(3, 2)) == 3
    assert gauss_sum_bruteforce(build_field(5, 1)).coeffs == (-1, 0, -2, -2)
    assert gauss_sum_bruteforce(build_field(3, 4)) == -9


def test_gauss_sum_formula_values():
    assert gauss_sum_formula(3, 1, 2).rational_value() == 3
    assert gauss_sum_formula(3, 1, 4).rational_value() == -9
    assert gauss_sum_formula(5, 1, 2).rational_value() == -5
    assert gauss_sum_formula(3, 2, 2).rational_value() == -9
    assert gauss_sum_formula(7, 1, 2).rational_value() == 7
    v = gauss_sum_formula(3, 1, 1)
    assert (v.half_exponent, v.i_power) == (1, 1)  # i * sqrt(3)
    assert not v.is_rational
    with pytest.raises(ValueError):
        gauss_sum_formula(2, 1, 2)


def test_gauss_formula_matches_bruteforce():
    for p, s, m in [(3, 1, 1), (3, 1, 2), (3, 1, 3), (3, 1, 4), (3, 2, 2),
                    (5, 1, 1), (5, 1, 2), (5, 1, 3), (7, 1, 2), (11, 1, 2),
                    (3, 2, 1), (3, 1, 6)]:
        brute = gauss_sum_bruteforce(build_field(p, s * m))
        assert gauss_formula_to_cyclotomic(gauss_sum_formula(p, s, m)) == brute, (p, s, m)


def test_gauss_rational_requires_even_exponent():
    with pytest.raises(ValueError):
        gauss_rational(3, 1, 1)


def test_gauss_product_over_q():
    # G_1 * G_m / q is rational for odd m; oracle: multiply the ring values
    for p, s, m in [(3, 1, 1), (3, 1, 3), (5, 1, 3), (3, 2, 3), (7, 1, 1)]:
        g1 = gauss_formula_to_cyclotomic(gauss_sum_formula(p, s, 1))
        gm = gauss_formula_to_cyclotomic(gauss_sum_formula(p, s, m))
        q = p ** s
        prod = g1 * gm
        expected = gauss_product_over_q(p, s, m) * q
        assert prod == CyclotomicInteger.from_int(p, expected), (p, s, m)


def test_quadratic_completion_exhaustive():
    for p, n in [(3, 1), (3, 2), (5, 1)]:
        ctx = build_field(p, n)
        for a2 in range(1, ctx.order):
            for a1 in range(ctx.order):
                for a0 in range(ctx.order):
                    assert (quadratic_completion_sum(ctx, a2, a1, a0)
                            == quadratic_completion_closed_form(ctx, a2, a1, a0))


def test_quadratic_completion_rejects_bad_args():
    ctx = build_field(3, 1)
    with pytest.raises(ValueError):
        quadratic_completion_sum(ctx, 0, 1, 1)
    with pytest.raises(ValueError):
        quadratic_completion_sum(build_field(2, 2), 1, 0, 0)


def test_additive_char_is_root_of_unity():
    tw = build_tower(3, 1, 2, 2)
    v = additive_char(tw, "m2", 1, tw.ctx2.alpha)
    assert v * v * v == 1 or v == 1


def test_orbit_representatives():
    tw = build_tower(3, 1, 1, 2)
    reps = orbit_representatives(tw, tuple(range(1, 9)) + (0,))
    assert len(reps) == 4  # 8 units in 4 orbits of size q-1 = 2
    with pytest.raises(ValueError):
        orbit_representatives(tw, (1,))  # not scalar-invariant for q = 3


def test_set_char_sum_orbit_vs_ring_oracle():
    for p, s, m2 in [(3, 1, 2), (3, 1, 3), (2, 1, 3), (2, 2, 2), (5, 1, 3)]:
        tw = build_tower(p, s, 1, m2)
        for kind in ("D1", "D2", "D1_tilde", "D2_tilde"):
            D = build_D(tw, kind)
            for b in range(tw.ctx2.order):
                set_char_sum(tw, D, b, check=True)  # raises on disagreement


def test_char_sum_lemma_values():
    tw = build_tower(3, 1, 1, 2)
    d1 = build_D(tw, "D1")
    assert all(set_char_sum(tw, d1, b) == -1 for b in range(1, 9))
    assert set_char_sum(tw, d1, 0) == len(d1) == 8
    d2 = build_D(tw, "D2")
    fq_units = set(tw.subfield_units("m2"))
    for b in range(1, 9):
        expected = -3 if b in fq_units else 0
        assert set_char_sum(tw, d2, b) == expected
    d1t = build_D(tw, "D1_tilde")
    assert all(set_char_sum(tw, d1t, b) == set_char_sum(tw, d1, b) + 1
               for b in range(9))


def test_count_trace_square_frozen():
    tw = build_tower(3, 1, 1, 2)
    assert [count_trace_square_equals(tw, r) for r in range(3)] == [4, 2, 2]
    tw3 = build_tower(3, 1, 1, 3)
    assert count_trace_square_equals(tw3, 0) == 8  # q^{m2-1} - 1
    assert sum(count_trace_square_equals(tw3, r) for r in range(3)) == 26


def test_count_trace_square_both_parities_closed_form():
    # the closed form is asserted inside the function; run both parities
    for p, s, m2 in [(3, 1, 2), (3, 1, 3), (3, 1, 4), (3, 1, 5), (5, 1, 2),
                     (5, 1, 3), (7, 1, 2), (3, 2, 2), (3, 2, 3)]:
        tw = build_tower(p, s, 1, m2)
        total = sum(count_trace_square_equals(tw, r) for r in range(tw.q))
        assert total == tw.q ** m2 - 1


def test_gauss_sum_value_rationality():
    assert GaussSumValue(3, 2, 2).rational_value() == -3
    with pytest.raises(ValueError):
        GaussSumValue(3, 1, 1).rational_value()
