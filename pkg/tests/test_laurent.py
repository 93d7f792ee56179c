import pytest
from hypothesis import given, strategies as st

from fusiongw.laurent import Laurent
from fusiongw.partitions import AffineWeight
from fusiongw.states import State, inner


laurents = st.dictionaries(
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-9, max_value=9),
    max_size=4,
).map(Laurent)


def test_eval_basics():
    assert Laurent({1: 1}).evaluate(1.0) == 1
    p = Laurent({2: 3, -1: -1})
    assert abs(p.evaluate(2.0) - 11.5) < 1e-12
    assert Laurent.zero().evaluate(0.37 + 2j) == 0


def test_eval_zero_base():
    with pytest.raises(ZeroDivisionError):
        Laurent({-1: 1}).evaluate(0)
    assert Laurent({2: 5}).evaluate(0) == 0


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * Laurent.one() == a
    assert a + Laurent.zero() == a
    assert a - a == Laurent.zero()


@given(laurents, laurents)
def test_conj_is_ring_map(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@given(laurents)
def test_negate_odd_involution(a):
    assert a.negate_odd().negate_odd() == a


def test_json_roundtrip():
    p = Laurent({-2: 10 ** 30, 3: -7})
    assert Laurent.from_json(p.to_json()) == p
    assert p.to_json() == {"-2": str(10 ** 30), "3": "-7"}


def _w(labels):
    return AffineWeight(3, labels)


def test_inner_orthonormal():
    a = State.basis("weight", _w((1, 0, 0)))
    b = State.basis("weight", _w((0, 1, 0)))
    assert inner(a, a) == Laurent.one()
    assert inner(a, b) == Laurent.zero()


def test_inner_conjugates_first_slot():
    a = State.basis("weight", _w((1, 0, 0)))
    za = a.shifted(1)
    assert inner(za, a) == Laurent({-1: 1})
    assert inner(a, za) == Laurent({1: 1})


def test_inner_sesquilinear():
    a = State.basis("weight", _w((1, 0, 0)))
    b = State.basis("weight", _w((0, 1, 0)))
    u = a.scaled(Laurent({1: 2})) + b.scaled(Laurent({0: 3}))
    v = a.scaled(Laurent({-1: 1})) + b
    # conj(2z) * z^-1 + conj(3) * 1
    assert inner(u, v) == Laurent({-2: 2, 0: 3})


def test_inner_basis_mismatch():
    a = State.basis("weight", _w((1, 0, 0)))
    w = State.basis("word", (1, 0))
    with pytest.raises(ValueError):
        inner(a, w)
