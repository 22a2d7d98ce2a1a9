from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cubicdet.errors import CapExceeded, CtxMismatch, DivisionByZero, NotPrime, RationalCtx, ReducibleModulus, UsageError
from cubicdet.field import (GF, QQ, FieldElement, arithmetic, embedding, extension, field_make,
                            frobenius, parse_field_spec, tower_embedding, univariate_roots)


def el(K, v):
    return FieldElement(K, K.coerce(v))


def test_gf4_default_modulus():
    K = field_make(2, 2)
    assert K.modulus == (1, 1, 1)
    w = K.generator()
    assert K.mul(w, w) == K.add(w, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        field_make(2, 2, [1, 0, 1])


def test_prime_field_and_not_prime():
    K = field_make(3)
    assert K.q == 3 and K.m == 1
    with pytest.raises(NotPrime):
        field_make(6)


def test_arithmetic_examples():
    K4 = GF(2, 2)
    w = FieldElement(K4, K4.generator())
    assert arithmetic(w, w, "mul") == w + 1
    K5 = GF(5)
    assert arithmetic(el(K5, 3), el(K5, 2), "div") == el(K5, 4)
    assert el(QQ, Fraction(1, 17)) + el(QQ, Fraction(4, 17)) == el(QQ, Fraction(5, 17))


def test_arithmetic_errors():
    K5, K7 = GF(5), GF(7)
    with pytest.raises(DivisionByZero):
        el(K5, 1) / el(K5, 0)
    with pytest.raises(CtxMismatch):
        arithmetic(el(K5, 1), el(K7, 1), "add")


def test_frobenius_examples():
    K4 = GF(2, 2)
    w = FieldElement(K4, K4.generator())
    assert frobenius(w, 1) == w + 1
    assert frobenius(w, 2) == w
    assert frobenius(el(GF(5), 3), 1) == el(GF(5), 3)
    with pytest.raises(RationalCtx):
        frobenius(el(QQ, 2))


def test_univariate_roots_examples():
    K2, K3 = GF(2), GF(3)
    roots = univariate_roots([el(K2, 1), el(K2, 1), el(K2, 1)], e=2)
    K4 = GF(2, 2)
    w = K4.generator()
    assert sorted(r.value for r, _ in roots) == sorted([w, K4.add(w, 1)])
    assert all(m == 1 for _, m in roots)
    roots = univariate_roots([el(K3, 0), el(K3, -1), el(K3, 0), el(K3, 1)])
    assert sorted(r.value for r, _ in roots) == [0, 1, 2]
    assert univariate_roots([el(K3, 1), el(K3, 0), el(K3, 1)]) == []
    assert len(univariate_roots([el(K3, 1), el(K3, 0), el(K3, 1)], e=2)) == 2


def test_univariate_roots_multiplicity():
    # (t - 1)^2 (t - 2) over F_5 = t^3 - 4t^2 + 5t - 2
    K = GF(5)
    roots = univariate_roots([el(K, -2), el(K, 5), el(K, -4), el(K, 1)])
    assert [(r.value, m) for r, m in roots] == [(1, 2), (2, 1)]


def test_extension_cap():
    with pytest.raises(CapExceeded):
        extension(GF(7), 9)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    from cubicdet.field import prime_power
    K = GF(*prime_power(q))
    xs = list(K.elements())
    assert len(xs) == q
    for a in xs:
        assert K.pow(a, q) == a
        if a:
            assert K.mul(a, K.inv(a)) == K.one
        assert K.add(a, K.neg(a)) == 0
        for b in xs:
            assert K.add(a, b) == K.add(b, a)
            assert K.mul(a, b) == K.mul(b, a)
            for c in xs[:5]:
                assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
                assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))


@pytest.mark.parametrize("p,m,e", [(2, 1, 2), (2, 2, 2), (3, 1, 2), (2, 1, 3), (3, 2, 2)])
def test_embedding_is_homomorphism_fixed_by_frobenius(p, m, e):
    K = GF(p, m)
    L = GF(p, m * e)
    emb = embedding(K, L)
    for a in K.elements():
        assert L.pow(emb(a), K.q) == emb(a)
        for b in K.elements():
            assert emb(K.add(a, b)) == L.add(emb(a), emb(b))
            assert emb(K.mul(a, b)) == L.mul(emb(a), emb(b))
    fixed = [x for x in L.elements() if L.pow(x, K.q) == x]
    assert sorted(fixed) == sorted(emb(a) for a in K.elements())


def test_tower_embedding_commutes():
    base, mid, top = GF(2), GF(2, 2), GF(2, 4)
    t = tower_embedding(base, mid, top)
    for a in base.elements():
        assert t(embedding(base, mid)(a)) == embedding(base, top)(a)


def test_parse_field_spec():
    assert parse_field_spec("Q") is QQ
    assert parse_field_spec("q=4") == GF(2, 2)
    assert parse_field_spec("q=3^2") == GF(3, 2)
    K = parse_field_spec("q=9,mod=w^2+1")
    assert K.modulus == (1, 0, 1)
    for bad in ("q=6", "q=x", "F"):
        with pytest.raises(UsageError):
            parse_field_spec(bad)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 3), (3, 2), (5, 1), (7, 1)]), st.data())
def test_field_inverse_property(pm, data):
    K = GF(*pm)
    a = data.draw(st.integers(1, K.q - 1))
    b = data.draw(st.integers(0, K.q - 1))
    assert K.div(K.mul(b, a), a) == b
