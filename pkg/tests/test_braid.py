import pytest

from purebraid.braid import (
    BraidWord,
    alternating_word,
    is_reduced_lift,
    left_divides,
    lift,
)
from purebraid.coxeter import CoxeterError, named_system


def test_parse_and_str_roundtrip():
    system = named_system("B3")
    b = BraidWord.parse(system, "s1 s2^-1 s3 s1^2")
    assert b.letters == ((0, 1), (1, -1), (2, 1), (0, 1), (0, 1))
    assert str(b) == "s1 s2^-1 s3 s1 s1"
    assert str(BraidWord(system)) == "e"
    with pytest.raises(CoxeterError):
        BraidWord.parse(system, "s7")


def test_inverse_and_power():
    system = named_system("A3")
    b = BraidWord.parse(system, "s1 s2^-1")
    assert (b * b.inv()).free_reduce() == BraidWord(system)
    assert b ** 3 == b * b * b
    assert b ** -2 == (b.inv()) * (b.inv())
    assert b ** 0 == BraidWord(system)


def test_projection_is_morphism():
    system = named_system("B3")
    u = BraidWord.parse(system, "s1 s2 s1^-1")
    v = BraidWord.parse(system, "s3 s2")
    assert (u * v).project() == u.project() * v.project()
    assert u.inv().project() == u.project().inv()


def test_lift_and_reduced_lift():
    system = named_system("A3")
    for w in system.elements():
        b = lift(w)
        assert is_reduced_lift(b)
        assert b.project() == w
    assert not is_reduced_lift(BraidWord.parse(system, "s1 s1"))
    with pytest.raises(CoxeterError):
        is_reduced_lift(BraidWord.parse(system, "s1^-1"))


def test_left_divides():
    system = named_system("A3")
    u = BraidWord.parse(system, "s1")
    v = BraidWord.parse(system, "s1 s2 s1")
    w = BraidWord.parse(system, "s2 s3")
    assert left_divides(u, v)
    assert not left_divides(w, v)
    # s2 left-divides s1 s2 s1 = s2 s1 s2 as a reduced lift
    assert left_divides(BraidWord.parse(system, "s2"), v)
    with pytest.raises(CoxeterError):
        left_divides(BraidWord.parse(system, "s1^-1"), v)


def test_alternating_word():
    system = named_system("I2(5)")
    b = alternating_word(system, 0, 1, 5)
    assert str(b) == "s t s t s"
    with pytest.raises(CoxeterError):
        alternating_word(system, 0, 1, 6)
    with pytest.raises(CoxeterError):
        alternating_word(system, 0, 0, 2)


def test_validation():
    system = named_system("A2")
    with pytest.raises(CoxeterError):
        BraidWord(system, [(5, 1)])
    with pytest.raises(CoxeterError):
        BraidWord(system, [(0, 2)])
    other = named_system("B2")
    with pytest.raises(CoxeterError):
        BraidWord(system, [(0, 1)]) * BraidWord(other, [(0, 1)])


def test_reverse_and_positive():
    system = named_system("A2")
    b = BraidWord.parse(system, "s1 s2^-1")
    assert b.reverse().letters == ((1, -1), (0, 1))
    assert not b.is_positive()
    assert BraidWord.parse(system, "s1 s2").is_positive()
