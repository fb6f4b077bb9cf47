import pytest
from hypothesis import given, strategies as st

from permutiple.digitnum import (
    DigitTuple,
    ParseError,
    Perm,
    SizeMismatch,
    ValueOverflow,
    apply_perm,
    compose,
    conjugate,
    cycle_shift,
    from_integer,
    inverse,
    order,
    parse_perm,
    parse_tuple,
    power,
    reversal,
    to_integer,
)


@st.composite
def digit_tuples(draw, max_len=8):
    base = draw(st.integers(3, 16))
    digits = draw(st.lists(st.integers(0, base - 1), min_size=1, max_size=max_len))
    return DigitTuple(base, tuple(digits))


@st.composite
def perms(draw, size=None):
    if size is None:
        size = draw(st.integers(1, 8))
    return Perm(tuple(draw(st.permutations(range(size)))))


def test_to_integer_examples():
    assert to_integer(parse_tuple("(8,7,9,1,2)_10")) == 87912
    assert to_integer(DigitTuple(7, (0, 0, 0))) == 0
    # independent oracle: Python's own base-12 parser
    assert to_integer(parse_tuple("(1,8,6,10,3,5)_12")) == int("186a35", 12) == 426569


def test_from_integer_examples():
    assert from_integer(87912, 10, 5) == parse_tuple("(8,7,9,1,2)_10")
    assert from_integer(0, 6, 5).digits == (0, 0, 0, 0, 0)
    assert str(from_integer(426569, 12, 6)) == "(1,8,6,10,3,5)_12"


def test_from_integer_overflow():
    with pytest.raises(ValueOverflow):
        from_integer(10**5, 10, 5)


@pytest.mark.parametrize("base,digits", [(2, (1,)), (10, ()), (10, (10,)), (6, (-1,))])
def test_digit_tuple_invariants(base, digits):
    with pytest.raises(ValueError):
        DigitTuple(base, digits)


def test_leading_zeros_allowed():
    t = parse_tuple("(0,0,1)_3")
    assert t.value == 1 and len(t) == 3


@given(digit_tuples())
def test_round_trip(t):
    assert from_integer(to_integer(t), t.base, len(t)) == t


def test_apply_perm_examples():
    t = parse_tuple("(8,7,9,1,2)_10")
    assert apply_perm(t, reversal(5)) == parse_tuple("(2,1,9,7,8)_10")
    assert apply_perm(t, Perm.identity(5)) == t
    psi4 = power(cycle_shift(5), 4)
    assert apply_perm(parse_tuple("(4,3,5,1,2)_6"), psi4) == parse_tuple("(3,5,1,2,4)_6")


def test_apply_perm_size_mismatch():
    with pytest.raises(SizeMismatch):
        apply_perm(parse_tuple("(1,2)_10"), Perm.identity(3))


@given(st.data())
def test_apply_perm_composes(data):
    t = data.draw(digit_tuples())
    p = data.draw(perms(len(t)))
    q = data.draw(perms(len(t)))
    assert apply_perm(apply_perm(t, p), q) == apply_perm(t, compose(p, q))


def test_cycle_shift():
    assert cycle_shift(5).image == (1, 2, 3, 4, 0)
    assert cycle_shift(1).is_identity()
    assert power(cycle_shift(5), 4).image == (4, 0, 1, 2, 3)


def test_order_examples():
    assert order(Perm.identity(4)) == 1
    # iterate until identity
    psi = cycle_shift(6)
    p, m = psi, 1
    while not p.is_identity():
        p, m = compose(p, psi), m + 1
    assert m == 6 == order(psi)


def test_conjugate_example():
    # (1,2) rho (1,2) on five points
    t12 = parse_perm("(1,2)", 5)
    rho = reversal(5)
    assert conjugate(rho, t12) == compose(compose(t12, rho), t12)
    assert conjugate(rho, t12) == parse_perm("(0,4)(1,3)", 5).conjugate(t12)
    assert conjugate(rho, t12).cycle_notation() == "(0,4)(2,3)"


@given(st.integers(1, 12))
def test_cycle_shift_order(m):
    assert order(cycle_shift(m)) == m


@given(st.data())
def test_conjugate_preserves_cycle_type(data):
    p = data.draw(perms())
    q = data.draw(perms(p.size))
    assert conjugate(p, q).cycle_type() == p.cycle_type()


@given(perms())
def test_order_is_least_period(p):
    m = order(p)
    assert power(p, m).is_identity()
    assert all(not power(p, i).is_identity() for i in range(1, m))


@given(perms())
def test_inverse(p):
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


@given(perms())
def test_perm_text_round_trip(p):
    assert parse_perm(p.cycle_notation(), p.size) == p
    assert parse_perm(p.oneline(), p.size) == p


@pytest.mark.parametrize(
    "text,image",
    [
        ("(0,4)(1,3)", (4, 3, 2, 1, 0)),
        ("rho", (4, 3, 2, 1, 0)),
        ("[4,3,2,1,0]", (4, 3, 2, 1, 0)),
        ("()", (0, 1, 2, 3, 4)),
        ("", (0, 1, 2, 3, 4)),
        ("psi^4", (4, 0, 1, 2, 3)),
        ("psi^-1", (4, 0, 1, 2, 3)),
        ("(4,2,0,1,3)", (1, 3, 0, 4, 2)),
        # products compose right to left
        ("(1,2)psi^4", (4, 0, 2, 1, 3)),
        ("(4,0)(3,2,1)", (4, 3, 1, 2, 0)),
    ],
)
def test_parse_perm(text, image):
    assert parse_perm(text, 5).image == image


@pytest.mark.parametrize(
    "text,column",
    [("(0,4)(1,x)", 6), ("(0,5)", 1), ("rho?", 4), ("[0,1]", 1)],
)
def test_parse_perm_errors(text, column):
    with pytest.raises(ParseError) as exc:
        parse_perm(text, 5)
    assert exc.value.column == column


@pytest.mark.parametrize(
    "text,column",
    [("8,7,9)_10", 1), ("(8,7,9_10", 10), ("(8,7,9)10", 8), ("(8,a,9)_10", 4), ("(8,7,12)_10", 10)],
)
def test_parse_tuple_errors(text, column):
    with pytest.raises(ParseError) as exc:
        parse_tuple(text)
    assert exc.value.column == column


def test_tuple_text_round_trip():
    for text in ["(5,1,8,6,10,3)_12", "(0)_3", "(8,7,9,1,2)_10"]:
        assert str(parse_tuple(text)) == text
