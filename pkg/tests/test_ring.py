import json
import random
from fractions import Fraction

import pytest

from rp3vertex.ring import (ExpansionError, KahlerSeries, Laurent, QSeries,
                            RationalFunction, expand, rf_arith, rf_equal,
                            series_divide, series_multiply)

q = RationalFunction.monomial(2, 0)
t = RationalFunction.monomial(0, 2)
qh = RationalFunction.monomial(1, 0)
th = RationalFunction.monomial(0, 1)
one = RationalFunction.one()
zero = RationalFunction.zero()


def random_laurent(rng, nterms=4, span=4):
    terms = {}
    for _ in range(rng.randrange(nterms + 1)):
        e = (rng.randrange(-span, span + 1), rng.randrange(-span, span + 1))
        terms[e] = rng.randrange(-9, 10)
    return Laurent(terms)


def random_rf(rng):
    num = random_laurent(rng)
    dens = [Laurent({(0, 0): 1, (rng.randrange(1, 4) * 2, 0): -1}),
            Laurent({(0, 0): 1, (0, rng.randrange(1, 4) * 2): -1}),
            Laurent({(0, 0): 1, (2, 2): -1})]
    rf = RationalFunction(num)
    for d in dens[:rng.randrange(3)]:
        rf = rf / RationalFunction(d)
    return rf


# -- Laurent ring axioms -----------------------------------------------------

def test_laurent_ring_axioms_randomized():
    rng = random.Random(20240817)
    for _ in range(1100):
        a, b, c = (random_laurent(rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()
        assert a + Laurent() == a
        assert a * Laurent.const(1) == a


def test_laurent_evaluation_homomorphism():
    rng = random.Random(7)
    pts = [(Fraction(2, 3), Fraction(5, 7)), (Fraction(-3, 2), Fraction(1, 4))]
    for _ in range(300):
        a, b = random_laurent(rng), random_laurent(rng)
        for (x, y) in pts:
            assert (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
            assert (a + b).evaluate(x, y) == a.evaluate(x, y) + b.evaluate(x, y)


# -- rational functions ------------------------------------------------------

def test_rf_arith_identities():
    a = qh / (1 - q)
    assert rf_equal(rf_arith(a, zero, "add"), a)
    assert rf_equal(rf_arith(a, one, "mul"), a)
    assert rf_equal(a * (1 - q), qh)
    assert rf_equal(1 / (1 - q) + 1 / (1 - t), (2 - q - t) / ((1 - q) * (1 - t)))


def test_rf_arith_unknown_op():
    with pytest.raises(ValueError):
        rf_arith(one, one, "pow")


def test_rf_equal_examples():
    assert rf_equal(q / (1 - q) ** 2, q * (1 + q) / ((1 - q) ** 2 * (1 + q)))
    assert not rf_equal(q / (1 - q) ** 2, q / (1 - q))
    a = (1 + q * t) / ((1 - q) * (1 - t))
    assert rf_equal(a, a)


def test_rf_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        one / zero
    with pytest.raises(ZeroDivisionError):
        rf_arith(one, zero, "div")
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Laurent.const(1), Laurent())


def test_rf_field_axioms_via_evaluation():
    # evaluation at random rational points is the independent oracle
    rng = random.Random(99)
    x, y = Fraction(3, 5), Fraction(7, 11)
    for _ in range(1000):
        a, b = random_rf(rng), random_rf(rng)
        assert (a + b).evaluate(x, y) == a.evaluate(x, y) + b.evaluate(x, y)
        assert (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
        assert (a - b).evaluate(x, y) == a.evaluate(x, y) - b.evaluate(x, y)
        if not b.is_zero() and b.evaluate(x, y) != 0:
            assert (a / b).evaluate(x, y) == a.evaluate(x, y) / b.evaluate(x, y)


def test_rf_sum_of_matches_pairwise():
    rng = random.Random(4)
    for _ in range(100):
        vals = [random_rf(rng) for _ in range(5)]
        total = zero
        for v in vals:
            total = total + v
        assert rf_equal(RationalFunction.sum_of(vals), total)


def test_substitute_t_eq_q_examples():
    assert rf_equal((q / (th * (1 - q))).substitute_t_eq_q(), qh / (1 - q))
    a = qh / (1 - q)
    assert rf_equal(a.substitute_t_eq_q(), a)
    lead = q / (1 - q) ** 2
    assert rf_equal(lead.substitute_t_eq_q(), lead)


def test_substitute_commutes_with_arith():
    rng = random.Random(11)
    for _ in range(200):
        a, b = random_rf(rng), random_rf(rng)
        assert rf_equal((a + b).substitute_t_eq_q(),
                        a.substitute_t_eq_q() + b.substitute_t_eq_q())
        assert rf_equal((a * b).substitute_t_eq_q(),
                        a.substitute_t_eq_q() * b.substitute_t_eq_q())


def test_swap_qt_involution():
    rng = random.Random(12)
    for _ in range(200):
        a = random_rf(rng)
        assert rf_equal(a.swap_qt().swap_qt(), a)


def test_rf_json_roundtrip():
    rng = random.Random(13)
    for _ in range(50):
        a = random_rf(rng)
        back = RationalFunction.from_json(json.loads(json.dumps(a.to_json())))
        assert rf_equal(a, back)


# -- expansion ---------------------------------------------------------------

def test_expand_geometric():
    ser = expand(qh / (1 - q), 3)
    assert ser.prefactor == Laurent.monomial(1, 0)
    assert ser.coeffs == {0: {0: 1}, 2: {0: 1}, 4: {0: 1}, 6: {0: 1}}


def test_expand_refined_example():
    # the (1,1) display value: prefactor sqrt(t) shifted, rows t, (1+t), ...
    ser = expand((q + t) / (th * (1 - q)), 5)
    assert ser.prefactor == Laurent.monomial(0, -1)
    assert ser.coeffs[0] == {2: 1}
    for k in range(1, 6):
        assert ser.coeffs[2 * k] == {0: 1, 2: 1}


def test_expand_truncation_consistency():
    rng = random.Random(17)
    ran = 0
    for _ in range(120):
        a = random_rf(rng)
        if a.is_zero():
            continue
        try:
            long = expand(a, 9)
        except ExpansionError:
            continue  # value not polynomial in t: outside the precondition
        ran += 1
        short = expand(a, 5)
        assert long.prefactor == short.prefactor
        for qe in range(0, short.order + 1):
            assert long.coeffs.get(qe, {}) == short.coeffs.get(qe, {})
    assert ran >= 40


def test_expand_multiplicativity():
    rng = random.Random(19)
    ran = 0
    for _ in range(120):
        a, b = random_rf(rng), random_rf(rng)
        if a.is_zero() or b.is_zero():
            continue
        try:
            sa, sb, sab = expand(a, 6), expand(b, 6), expand(a * b, 6)
        except ExpansionError:
            continue
        ran += 1
        # convolve the two truncations, including prefactors
        conv = {}
        for qa, pa in sa.coeffs.items():
            for qb, pb in sb.coeffs.items():
                if qa + qb > 12:
                    continue
                acc = conv.setdefault(qa + qb, {})
                for ta, ca in pa.items():
                    for tb, cb in pb.items():
                        acc[ta + tb] = acc.get(ta + tb, 0) + ca * cb
        (qe1, te1), c1 = sa.prefactor.min_term()
        (qe2, te2), c2 = sb.prefactor.min_term()
        (qe3, te3), c3 = sab.prefactor.min_term()
        assert qe3 == qe1 + qe2 and te3 == te1 + te2
        scale = Fraction(c1) * Fraction(c2) / Fraction(c3)
        for qe in range(0, 13):
            want = {te: v * scale for te, v in conv.get(qe, {}).items() if v}
            want = {te: v for te, v in want.items() if v}
            assert sab.coeffs.get(qe, {}) == want
    assert ran >= 20


def test_expand_error_mixed_factor():
    bad = RationalFunction(Laurent.const(1),
                           Laurent({(0, 0): 2, (2, 0): -1, (0, 2): -1}))
    with pytest.raises(ExpansionError):
        expand(bad, 5)


def test_expand_pure_t_division_error():
    # (1 - t) does not divide 1 + q coefficientwise
    bad = RationalFunction(Laurent({(0, 0): 1, (2, 0): 1}),
                           Laurent({(0, 0): 1, (0, 2): -1}))
    with pytest.raises(ExpansionError):
        expand(bad, 4)


def test_expand_pure_t_division_exact():
    # (t + q t) / (1 - t) is singular in t alone but fine times (1 - t)
    val = t * (1 + q) * (1 - t) / (1 - t)
    ser = expand(val, 4)
    assert ser.prefactor == Laurent.monomial(0, 2)
    assert ser.coeffs == {0: {0: 1}, 2: {0: 1}}


def test_expand_content_extraction():
    ser = expand(2 * (3 + 4 * q) / (1 - q), 3)
    assert ser.prefactor == Laurent.const(2)
    assert ser.coeffs == {0: {0: 3}, 2: {0: 7}, 4: {0: 7}, 6: {0: 7}}


def test_expand_in_t_variable():
    ser = expand(th / (1 - t), 3, var="t")
    assert ser.var == "t"
    assert ser.prefactor == Laurent.monomial(0, 1)
    assert ser.coeffs == {0: {0: 1}, 2: {0: 1}, 4: {0: 1}, 6: {0: 1}}


def test_qseries_violation_detection():
    good = expand(qh / (1 - q), 6)
    assert good.is_nonnegative_integral()
    bad = QSeries(Laurent.const(1), {0: {0: 1}, 2: {0: -1}}, 10)
    assert bad.first_violation() == (2, 0, -1)
    frac = QSeries(Laurent.const(Fraction(1, 2)), {0: {0: 1}}, 10)
    assert not frac.is_nonnegative_integral()


def test_qseries_json_roundtrip():
    ser = expand((q + t) / (th * (1 - q)), 6)
    back = QSeries.from_json(json.loads(json.dumps(ser.to_json())))
    assert back.prefactor == ser.prefactor
    assert back.coeffs == ser.coeffs
    assert back.order == ser.order


# -- bidegree series ---------------------------------------------------------

def series(cutoff, entries):
    return KahlerSeries(cutoff, entries)


def test_series_divide_identity():
    z = series(3, {(0, 0): one, (1, 0): q / (1 - q), (1, 1): 2 * one})
    assert series_divide(z, z).coeffs == {(0, 0): one}


def test_series_divide_zero_leading_numerator():
    num = series(2, {(1, 0): one})
    den = series(2, {(0, 0): one, (1, 0): q})
    quo = series_divide(num, den)
    assert (0, 0) not in quo.coeffs
    assert rf_equal(quo.coeff(1, 0), one)


def test_series_divide_hand_example():
    c, d = q, t
    num = series(2, {(0, 0): one, (1, 0): c})
    den = series(2, {(0, 0): one, (1, 0): d})
    quo = series_divide(num, den)
    assert rf_equal(quo.coeff(1, 0), c - d)
    assert rf_equal(quo.coeff(2, 0), d * d - c * d)


def test_series_divide_errors():
    num = series(2, {(0, 0): one})
    with pytest.raises(ZeroDivisionError):
        series_divide(num, series(2, {(1, 0): one}))
    with pytest.raises(ValueError):
        series_divide(num, series(3, {(0, 0): one}))


def test_series_multiply_divide_roundtrip():
    rng = random.Random(23)
    for _ in range(20):
        a_entries = {}
        for r in range(3):
            for s in range(3 - r):
                if rng.random() < 0.7:
                    a_entries[(r, s)] = random_rf(rng)
        b_entries = {(0, 0): one}
        for r in range(3):
            for s in range(3 - r):
                if (r, s) != (0, 0) and rng.random() < 0.5:
                    b_entries[(r, s)] = random_rf(rng)
        a = series(2, a_entries)
        b = series(2, b_entries)
        back = series_divide(series_multiply(a, b), b)
        assert back.equal_through(a, 2) is None


def test_kahler_series_contract():
    with pytest.raises(ValueError):
        KahlerSeries(-1)
    z = series(2, {(0, 0): one})
    assert z.is_determined(1, 1)
    assert not z.is_determined(3, 0)
    with pytest.raises(KeyError):
        z.coeff(3, 0)
    assert z.coeff(1, 1).is_zero()


def test_kahler_json_roundtrip():
    z = series(2, {(0, 0): one, (1, 0): q / (1 - q), (0, 2): th / (1 - t)})
    back = KahlerSeries.from_json(json.loads(json.dumps(z.to_json())))
    assert back.cutoff == z.cutoff
    assert back.determined == z.determined
    assert back.equal_through(z, 2) is None


def test_kahler_monomial_substitution_hook():
    z = series(2, {(0, 0): one, (1, 0): q, (0, 1): t})
    got = z.evaluate_at_monomials(th, qh)
    assert rf_equal(got, one + q * th + t * qh)


def test_series_determinedness_propagation():
    # axis-only series (one-parameter geometry): quotient stays axis-only
    axis = {(r, 0) for r in range(4)}
    num = KahlerSeries(3, {(0, 0): one, (1, 0): q, (2, 0): q * q}, axis)
    den = KahlerSeries(3, {(0, 0): one, (1, 0): t}, axis)
    quo = series_divide(num, den)
    assert quo.determined == frozenset(axis)
    assert not quo.is_determined(1, 1)
    with pytest.raises(KeyError):
        quo.coeff(0, 1)
    # full-triangle inputs keep the full triangle
    full_num = KahlerSeries(2, {(0, 0): one, (1, 1): q})
    full_den = KahlerSeries(2, {(0, 0): one, (0, 1): t})
    assert series_divide(full_num, full_den).determined == full_num.determined
    prod = series_multiply(full_num, full_den)
    assert prod.determined == full_num.determined
    # partially determined factor poisons only the bidegrees it can reach
    partial = KahlerSeries(2, {(0, 0): one}, {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)})
    prod2 = series_multiply(full_num, partial)
    assert (0, 2) not in prod2.determined
    assert (1, 1) in prod2.determined
