from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xbtool.symfunc import (
    BivarPoly,
    PPoly,
    make_partition,
    tp_compose_linear,
    tp_eval,
    tp_mul,
    tp_render,
    tpoly,
)

K3_XB = PPoly({(1, 1, 1): (1,), (2, 1): (0, 3), (3,): (0, 0, 3, 1)})


def test_make_partition_sorts_and_rejects():
    assert make_partition([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(ValueError):
        make_partition([2, 0])


def test_product_concatenates_partitions():
    assert PPoly.p([1, 1]) * PPoly.p([2]) == PPoly.p([2, 1, 1])


def test_scale_by_t():
    a = PPoly.p([1]) + PPoly.p([1], (0, 1))
    assert a.scale((0, 1)) == PPoly({(1,): (0, 1, 1)})


def test_square():
    a = PPoly.p([1, 1]) + PPoly.p([2], (0, 1))
    expected = PPoly({(1, 1, 1, 1): (1,), (2, 1, 1): (0, 2), (2, 2): (0, 0, 1)})
    assert a * a == expected


@pytest.mark.parametrize("lam,sign", [((1, 1, 1), 1), ((3,), 1), ((2,), -1), ((2, 1), -1)])
def test_omega_signs(lam, sign):
    assert PPoly.p(lam).omega() == PPoly.p(lam).scale(sign)


def test_evaluate_examples():
    k2 = PPoly.p([1, 1]) + PPoly.p([2], (0, 1))
    assert k2.evaluate(-1, [1, 1]) == 2
    assert K3_XB.evaluate(1, [1, 1]) == 28
    assert PPoly.p([], (5,)).evaluate(3, []) == 5
    assert K3_XB.evaluate(2, []) == 0


def test_evaluate_is_exact():
    a = PPoly.p([2, 1], (1, 1))
    assert a.evaluate(Fraction(1, 3), [Fraction(1, 2)]) == Fraction(4, 3) * Fraction(1, 8)


def test_render():
    assert K3_XB.render() == "p[1,1,1] + 3t p[2,1] + (3t^2+t^3) p[3]"
    assert (PPoly.p([1, 1]) - PPoly.p([2])).render() == "p[1,1] - p[2]"
    assert PPoly().render() == "0"
    assert tp_render((0, -2, 1)) == "-2t+t^2"


def test_serialize_round_trip_and_sentinel():
    assert PPoly().serialize() == b"0"
    assert PPoly.deserialize(b"0") == PPoly()
    data = K3_XB.serialize()
    assert data == b"[1,1,1]:1;[2,1]:0,3;[3]:0,0,3,1"
    assert K3_XB.serialize() == data
    assert PPoly.deserialize(data) == K3_XB


@pytest.mark.parametrize("bad", [b"", b"[1,2]:1", b"[1]:1,0", b"[1]", b"x", b"[1]:1;[1]:2"])
def test_deserialize_rejects(bad):
    with pytest.raises(ValueError):
        PPoly.deserialize(bad)


def test_at_t_and_degrees():
    assert K3_XB.at_t(-1) == PPoly({(1, 1, 1): (1,), (2, 1): (-3,), (3,): (2,)})
    assert K3_XB.degrees() == {3}


def test_tpoly_helpers():
    assert tpoly(1, 2, 0) == (1, 2)
    assert tp_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert tp_eval((1, 2, 1), 3) == 16
    # a(t) = t^2 -> (t + 1)^2
    assert tp_compose_linear((0, 0, 1), 1) == (1, 2, 1)


def test_bivar():
    t = BivarPoly({(2, 0): 1, (1, 0): 1, (0, 1): 1})
    assert t.render() == "x^2 + x + y"
    assert t.evaluate(3, 2) == 14
    assert (t * BivarPoly.one()) == t


# -- property tests ---------------------------------------------------------

coeffs = st.lists(st.integers(-3, 3), max_size=3).map(tuple)
parts = st.lists(st.integers(1, 3), min_size=0, max_size=3).map(make_partition)
ppolys = st.dictionaries(parts, coeffs, max_size=4).map(PPoly)


@settings(max_examples=60, deadline=None)
@given(ppolys, ppolys, ppolys)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == PPoly()


@settings(max_examples=60, deadline=None)
@given(ppolys, ppolys)
def test_omega_involution_and_multiplicative(a, b):
    assert a.omega().omega() == a
    assert (a * b).omega() == a.omega() * b.omega()


@settings(max_examples=60, deadline=None)
@given(ppolys, ppolys, st.fractions(min_value=-4, max_value=4, max_denominator=4),
       st.lists(st.integers(-2, 2), max_size=3))
def test_evaluate_homomorphism(a, b, t, xs):
    assert (a * b).evaluate(t, xs) == a.evaluate(t, xs) * b.evaluate(t, xs)
    assert (a + b).evaluate(t, xs) == a.evaluate(t, xs) + b.evaluate(t, xs)


@settings(max_examples=60, deadline=None)
@given(ppolys, ppolys)
def test_serialization_is_faithful(a, b):
    assert (a.serialize() == b.serialize()) == (a == b)
    assert PPoly.deserialize(a.serialize()) == a
