import pytest
from hypothesis import given, settings, strategies as st

from modorbits.core import (
    ElementClass,
    Gen,
    Signature,
    apply_word,
    apply_x,
    apply_y,
    apply_y2,
    classify,
    format_word,
    is_positive_triple,
    make_signature,
    norm,
    parse_word,
    sign,
)
from modorbits.arith import divisors, squarefree_upto
from modorbits.errors import NotDivisible, NotSquareFree

TP, TN, NZ = ElementClass.TOTALLY_POSITIVE, ElementClass.TOTALLY_NEGATIVE, ElementClass.NORM_ZERO
SQUAREFREE = squarefree_upto(200)


@st.composite
def signatures(draw, max_n=200, max_a=50):
    n = draw(st.sampled_from(SQUAREFREE))
    a = draw(st.integers(-max_a, max_a))
    m = a * a + n
    c = draw(st.sampled_from(divisors(m))) * draw(st.sampled_from((1, -1)))
    return Signature(n, a, m // c, c)


def test_make_signature():
    assert make_signature(5, 1, 2).abc == (1, 3, 2)
    assert make_signature(1, 0, 1).abc == (0, 1, 1)
    with pytest.raises(NotDivisible):
        make_signature(11, 1, 5)
    with pytest.raises(NotSquareFree) as err:
        make_signature(12, 1, 1)
    assert "2²" in str(err.value)
    with pytest.raises(ValueError):
        make_signature(5, 1, 0)


def test_bad_signature_rejected():
    with pytest.raises(AssertionError):
        Signature(5, 1, 2, 2)


def test_generator_table_examples():
    s = make_signature(5, 1, 2)
    assert apply_x(s).abc == (-1, 2, 3)
    assert apply_y(s).abc == (2, 3, 3)
    assert apply_y(apply_y(s)).abc == (1, 2, 3)
    assert apply_y2(s).abc == (1, 2, 3)
    assert apply_x(make_signature(1, 0, 1)).abc == (0, 1, 1)
    assert apply_y(make_signature(3, 1, 2)).abc == (1, 2, 2)
    assert apply_y2(make_signature(3, 1, 2)).abc == (1, 2, 2)
    # x row on (1,6,2): (-a, c, b)
    assert apply_x(Signature(11, 1, 6, 2)).abc == (-1, 2, 6)


def test_classify_and_norm():
    assert classify(make_signature(5, 1, 2)) is TP
    assert classify(Signature(5, -1, 2, 3)) is TN
    assert classify(Signature(6, 0, 3, 2)) is NZ
    assert norm(make_signature(5, 1, 2)) == 1
    assert norm(Signature(1, 0, 1, 1)) == 0


def test_words():
    s = make_signature(7, 3, 2)
    assert apply_word(s, []) == s
    assert apply_word(s, [Gen.X, Gen.X]) == s
    assert apply_word(s, [Gen.Y, Gen.Y, Gen.Y]) == s
    assert parse_word("x.y.yy") == [Gen.X, Gen.Y, Gen.Y2]
    assert parse_word("") == []
    assert format_word(parse_word("yy.x")) == "yy.x"
    with pytest.raises(ValueError):
        parse_word("x.z")


@settings(max_examples=500)
@given(signatures())
def test_generators_respect_relations(s):
    assert apply_x(apply_x(s)) == s
    assert apply_y(apply_y(apply_y(s))) == s
    assert apply_y2(s) == apply_y(apply_y(s))
    assert apply_y2(apply_y(s)) == s
    for t in (apply_x(s), apply_y(s), apply_y2(s)):
        assert t.n == s.n and t.b * t.c == t.a**2 + t.n
        assert sign(t.c) == sign(s.c)


@settings(max_examples=500)
@given(signatures())
def test_class_laws(s):
    k = classify(s)
    assert sign(s.b) == sign(s.c)
    assert (k is NZ) == (s.a == 0)
    assert (k is TN) == (classify(apply_x(s)) is TP)
    assert norm(apply_x(s)) == norm(s)
    if k is NZ:
        assert classify(apply_y(s)) is TP and classify(apply_y2(s)) is TP
    if k is TN:
        for t in (apply_y(s), apply_y2(s)):
            assert classify(t) is TP and norm(t) > norm(s)
    triple_classes = [classify(t) for t in (s, apply_y(s), apply_y2(s))]
    assert is_positive_triple(s) == all(c is TP for c in triple_classes)
    # at most one member of a y-triple leaves the totally positive class
    assert sum(c is not TP for c in triple_classes) <= 1


def all_signatures(max_n, max_a):
    for n in squarefree_upto(max_n):
        for a in range(-max_a, max_a + 1):
            m = a * a + n
            for c in divisors(m):
                yield Signature(n, a, m // c, c)
                yield Signature(n, a, -(m // c), -c)


def test_fixed_points_exhaustive():
    x_fixed, y_fixed = set(), set()
    for s in all_signatures(100, 50):
        assert apply_x(apply_x(s)) == s
        assert apply_y(apply_y(apply_y(s))) == s
        if apply_x(s) == s:
            x_fixed.add((s.n, *s.abc))
        if apply_y(s) == s:
            y_fixed.add((s.n, *s.abc))
    assert x_fixed == {(1, 0, 1, 1), (1, 0, -1, -1)}
    assert y_fixed == {(3, 1, 2, 2), (3, -1, -2, -2)}
