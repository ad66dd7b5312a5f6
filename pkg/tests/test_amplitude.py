import pytest

from rp3vertex.amplitude import (AmplitudeSpec, closed_amplitude, normalize,
                                 normalized_amplitude, open_amplitude,
                                 open_amplitude_refined, open_amplitude_regular,
                                 resolved_conifold_amplitude)
from rp3vertex.partitions import EMPTY, Partition, partitions_of
from rp3vertex.ring import RationalFunction, rf_equal
from rp3vertex.specialize import principal, skew_schur

q = RationalFunction.monomial(2, 0)
t = RationalFunction.monomial(0, 2)
qh = RationalFunction.monomial(1, 0)
th = RationalFunction.monomial(0, 1)
one = RationalFunction.one()

BOX = Partition([1])


def test_spec_validation():
    with pytest.raises(ValueError):
        AmplitudeSpec(geometry="local_p2")
    with pytest.raises(ValueError):
        AmplitudeSpec(cutoff=-1)
    with pytest.raises(ValueError):
        open_amplitude_regular(AmplitudeSpec(refined=True))
    with pytest.raises(ValueError):
        open_amplitude_refined(AmplitudeSpec(refined=False))


def test_closed_amplitude_leading():
    for refined in (False, True):
        z = closed_amplitude(refined, 2)
        assert z.coeff(0, 0).is_one()


def test_closed_refined_degree_one():
    z = closed_amplitude(True, 1)
    assert rf_equal(z.coeff(1, 0), 2 * qh * th / ((1 - t) * (1 - q)))
    assert rf_equal(z.coeff(0, 1), (t + q) / ((1 - t) * (1 - q)))


def test_closed_symmetry_and_reduction():
    zr = closed_amplitude(True, 3)
    assert zr.swap_qt().equal_through(zr, 3) is None
    zq = closed_amplitude(False, 3)
    assert zr.substitute_t_eq_q().equal_through(zq, 3) is None


def test_open_leading_is_schur_product():
    cases = [("[1]", "[]"), ("[1,1]", "[]"), ("[2]", "[]"), ("[1]", "[1,1]")]
    rho = principal("q")
    for refined in (False, True):
        for a_txt, g_txt in cases:
            from rp3vertex.partitions import parse_partition
            alpha, gamma = parse_partition(a_txt), parse_partition(g_txt)
            spec = AmplitudeSpec(alpha=alpha, gamma=gamma, refined=refined, cutoff=0)
            z = open_amplitude(spec)
            want = (skew_schur(alpha.conjugate(), EMPTY, rho)
                    * skew_schur(gamma.conjugate(), EMPTY, rho))
            assert rf_equal(z.coeff(0, 0), want), (a_txt, g_txt, refined)


def test_cutoff_monotonicity():
    colors = [("[1]", "[]"), ("[1,1]", "[]"), ("[1,1,1]", "[]"),
              ("[2]", "[]"), ("[3]", "[]"), ("[1]", "[1]"), ("[1]", "[1,1]")]
    from rp3vertex.partitions import parse_partition
    for refined in (False, True):
        for a_txt, g_txt in colors:
            alpha, gamma = parse_partition(a_txt), parse_partition(g_txt)
            small = open_amplitude(AmplitudeSpec(alpha=alpha, gamma=gamma,
                                                 refined=refined, cutoff=2))
            large = open_amplitude(AmplitudeSpec(alpha=alpha, gamma=gamma,
                                                 refined=refined, cutoff=3))
            assert large.equal_through(small, 2) is None, (a_txt, g_txt, refined)


def test_normalized_fundamental_unknot_values():
    zhat = normalized_amplitude(AmplitudeSpec(alpha=BOX, cutoff=3))
    assert rf_equal(zhat.coeff(0, 0), qh / (1 - q))
    assert rf_equal(zhat.coeff(1, 1), 2 * qh / (1 - q))
    assert zhat.coeff(2, 0).is_zero()
    assert zhat.coeff(0, 1).is_zero()


def test_normalize_contract():
    closed = closed_amplitude(False, 2)
    assert normalize(closed, closed).coeffs == {(0, 0): one}
    opened = open_amplitude(AmplitudeSpec(alpha=BOX, cutoff=2))
    zhat = normalize(opened, closed)
    assert rf_equal(zhat.coeff(0, 0), opened.coeff(0, 0))


def test_unnormalized_has_pure_fiber_terms():
    # the closed-string factor carries the pure fiber tower; it cancels only
    # in the normalized series
    raw = open_amplitude(AmplitudeSpec(alpha=BOX, cutoff=2))
    assert not raw.coeff(0, 1).is_zero()
    zhat = normalize(raw, closed_amplitude(False, 2))
    assert zhat.coeff(0, 1).is_zero()


def _product_form_q_coeffs(rmax, order):
    # prod_{n>=1} (1 - Q q^n)^n expanded: the closed single-edge oracle
    co = [{0: 1}] + [dict() for _ in range(rmax)]
    for n in range(1, order + 2):
        for _ in range(n):
            new = [dict(d) for d in co]
            for r in range(1, rmax + 1):
                for e, c in co[r - 1].items():
                    if e + n <= order:
                        new[r][e + n] = new[r].get(e + n, 0) - c
            co = new
    return [{e: c for e, c in d.items() if c} for d in co]


def test_conifold_closed_matches_product_form():
    from rp3vertex.ring import expand
    order = 12
    closed = resolved_conifold_amplitude(EMPTY, EMPTY, False, 3)
    want = _product_form_q_coeffs(3, order)
    for r in range(4):
        rf = closed.coeffs.get((r, 0))
        got = {}
        if rf is not None:
            ser = expand(rf, order)
            (pe, _), pc = ser.prefactor.min_term()
            for qe, poly in ser.coeffs.items():
                e = (qe + pe) // 2
                if e <= order:
                    got[e] = poly[0] * pc
        assert got == want[r], r


def test_conifold_closed_refined_matches_cauchy_sum():
    rho_q, rho_t = principal("q"), principal("t")
    closed = resolved_conifold_amplitude(EMPTY, EMPTY, True, 3)
    for r in range(4):
        cauchy = RationalFunction.sum_of(
            RationalFunction.of((-1) ** r)
            * skew_schur(nu, EMPTY, rho_q)
            * skew_schur(nu.conjugate(), EMPTY, rho_t)
            for nu in partitions_of(r))
        assert rf_equal(closed.coeffs.get((r, 0), RationalFunction.zero()), cauchy), r


def test_conifold_brane_leading():
    z = resolved_conifold_amplitude(BOX, EMPTY, False, 2)
    assert rf_equal(z.coeff(0, 0), qh / (1 - q))


def test_conifold_refined_reduces():
    for alpha, gamma in [(BOX, EMPTY), (BOX, BOX)]:
        ref = resolved_conifold_amplitude(alpha, gamma, True, 3)
        reg = resolved_conifold_amplitude(alpha, gamma, False, 3)
        assert ref.substitute_t_eq_q().equal_through(reg, 3) is None


def test_hopf_comparison_claims():
    local = normalized_amplitude(AmplitudeSpec(alpha=BOX, gamma=BOX, cutoff=3))
    con = normalize(resolved_conifold_amplitude(BOX, BOX, False, 3),
                    resolved_conifold_amplitude(EMPTY, EMPTY, False, 3))
    assert rf_equal(con.coeff(0, 0), local.coeff(0, 0))
    assert rf_equal(con.coeff(1, 0), -local.coeff(1, 0))
    assert not rf_equal(con.coeff(2, 0), local.coeff(2, 0))
    assert not rf_equal(con.coeff(2, 0), -local.coeff(2, 0))


def test_refined_open_not_symmetric_under_swap():
    zhat = normalized_amplitude(AmplitudeSpec(alpha=BOX, refined=True, cutoff=2))
    assert zhat.swap_qt().equal_through(zhat, 2) is not None
