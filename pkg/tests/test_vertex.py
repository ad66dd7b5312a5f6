import pytest

from rp3vertex.partitions import EMPTY, Partition, enumerate_up_to
from rp3vertex.ring import RationalFunction, rf_equal
from rp3vertex.specialize import principal, skew_schur
from rp3vertex.vertex import (framing_refined, framing_refined_pair,
                              framing_regular, vertex_refined, vertex_regular)

q = RationalFunction.monomial(2, 0)
t = RationalFunction.monomial(0, 2)
qh = RationalFunction.monomial(1, 0)
th = RationalFunction.monomial(0, 1)

BOX = Partition([1])


def test_trivial_vertices():
    assert vertex_regular(EMPTY, EMPTY, EMPTY).is_one()
    assert vertex_refined(EMPTY, EMPTY, EMPTY).is_one()


def test_vertex_regular_third_leg_only():
    assert rf_equal(vertex_regular(EMPTY, EMPTY, BOX), qh / (1 - q))
    for nu in enumerate_up_to(6):
        want = skew_schur(nu.conjugate(), EMPTY, principal("q"))
        assert rf_equal(vertex_regular(EMPTY, EMPTY, nu), want), nu


def test_vertex_regular_single_box_symmetry():
    assert rf_equal(vertex_regular(BOX, EMPTY, EMPTY),
                    vertex_regular(EMPTY, BOX, EMPTY))


def test_framing_regular_examples():
    assert framing_regular(EMPTY).is_one()
    assert rf_equal(framing_regular(BOX), -RationalFunction.one())
    assert rf_equal(framing_regular(Partition([2])), 1 / q)


def test_framing_refined_pair_examples():
    assert framing_refined_pair(EMPTY, EMPTY).is_one()
    assert rf_equal(framing_refined_pair(BOX, EMPTY), -RationalFunction.one())


def test_framing_refined_pair_reduces():
    for nu1 in enumerate_up_to(4):
        for nu2 in enumerate_up_to(4 - nu1.size):
            left = framing_refined_pair(nu1, nu2).substitute_t_eq_q()
            right = framing_regular(nu1) * framing_regular(nu2)
            assert rf_equal(left, right), (nu1, nu2)


def test_framing_refined_order_contract():
    with pytest.raises(ValueError):
        framing_refined(BOX, ("t", "t"))
    with pytest.raises(ValueError):
        vertex_refined(BOX, EMPTY, EMPTY, ("q", "q"))


def test_vertex_refined_third_leg_value():
    got = vertex_refined(EMPTY, EMPTY, BOX)
    assert rf_equal(got, qh / (1 - t))


def test_vertex_refined_swapped_order():
    got = vertex_refined(EMPTY, EMPTY, BOX, ("q", "t"))
    assert rf_equal(got, th / (1 - q))


def test_vertex_refined_reduces_to_regular():
    triples = []
    parts = enumerate_up_to(5)
    for lam in parts:
        for mu in parts:
            if lam.size + mu.size > 5:
                continue
            for nu in parts:
                if lam.size + mu.size + nu.size > 5:
                    continue
                triples.append((lam, mu, nu))
    for lam, mu, nu in triples:
        left = vertex_refined(lam, mu, nu).substitute_t_eq_q()
        right = vertex_regular(lam, mu, nu)
        assert rf_equal(left, right), (lam, mu, nu)
        swapped = vertex_refined(lam, mu, nu, ("q", "t")).substitute_t_eq_q()
        assert rf_equal(swapped, right), (lam, mu, nu)


def test_vertex_values_nonvanishing():
    parts = enumerate_up_to(5)
    for lam in parts:
        for mu in parts:
            if lam.size + mu.size > 5:
                continue
            for nu in parts:
                if lam.size + mu.size + nu.size > 5:
                    continue
                assert not vertex_regular(lam, mu, nu).is_zero(), (lam, mu, nu)
