import json

import pytest

from purebraid.coxeter import (
    CoxeterError,
    CoxeterSystem,
    coset_rep,
    exchange_witness,
    in_parabolic,
    is_I_reduced,
    is_reflection,
    load_system,
    longest_element,
    make_reflection,
    named_system,
    palindromize,
    parabolic_elements,
    reflections,
    subsystem,
    system_from_json,
    validate_system,
)


def test_named_system_orders():
    assert len(named_system("A3").elements()) == 24
    assert len(named_system("B3").elements()) == 48
    assert len(named_system("I2(5)").elements()) == 10
    assert len(named_system("D4").elements()) == 192


def test_named_system_errors():
    for bad in ("Z3", "A0", "B1", "I2(1)", "F5", "H5", "E9"):
        with pytest.raises(CoxeterError):
            named_system(bad)


def test_infinite_detection():
    aff = named_system("Atilde2")
    assert not aff.is_finite()
    lengths = {}
    for w in aff.enumerate_elements(max_length=3):
        lengths[len(w)] = lengths.get(len(w), 0) + 1
    assert lengths[0] == 1 and lengths[1] == 3 and lengths[2] == 6


def test_normal_form_idempotent_and_reduced():
    system = named_system("B3")
    w = system.normal_form((0, 1, 0, 1, 0, 1, 2, 1, 0))
    assert system.normal_form(w.word) == w
    assert system.is_reduced(w.word)
    assert not system.is_reduced((0, 0))


def test_group_axioms_sampled():
    system = named_system("A3")
    elems = system.elements()
    e = system.identity
    for w in elems:
        assert w * w.inv() == e and w.inv() * w == e
    u, v, w = elems[5], elems[11], elems[17]
    assert (u * v) * w == u * (v * w)


def test_longest_element_lengths():
    assert len(longest_element(named_system("A3"))) == 6
    assert len(longest_element(named_system("B3"))) == 9
    assert len(longest_element(named_system("D4"))) == 12
    assert len(longest_element(named_system("I2(7)"))) == 7


def test_longest_element_descents():
    system = named_system("B3")
    w0 = longest_element(system)
    assert w0.descents("left") == frozenset(range(3))
    assert w0.descents("right") == frozenset(range(3))


def test_reflection_counts():
    assert len(reflections(named_system("A3"))) == 6
    assert len(reflections(named_system("B3"))) == 9
    assert len(reflections(named_system("D4"))) == 12
    assert len(reflections(named_system("I2(5)"))) == 5


def test_palindromize_witness():
    system = named_system("B3")
    for r in reflections(system):
        u, s = palindromize(r.element)
        word = u.word + (s,) + u.word[::-1]
        assert system.normal_form(word) == r.element
        assert len(word) == len(r.element)
    with pytest.raises(CoxeterError):
        palindromize(system.normal_form((0, 1)))  # even length
    w = system.normal_form((0, 1, 2))
    if not is_reflection(w):
        with pytest.raises(CoxeterError):
            palindromize(w)


def test_make_reflection_and_conjugation():
    system = named_system("A3")
    r = make_reflection(system.gen(0))
    w = system.normal_form((2, 1))
    conj = w.conj(r.element)
    assert is_reflection(conj)


def test_coset_decomposition():
    system = named_system("B3")
    I = (0, 1)
    for w in system.elements():
        rep = coset_rep(w, I)
        assert is_I_reduced(rep, I)
        left = w * rep.inv()
        assert in_parabolic(left, I)
        assert len(left) + len(rep) == len(w)


def test_parabolic_elements_and_subsystem():
    system = named_system("B3")
    I = (0, 1)
    inside = parabolic_elements(system, I)
    assert len(inside) == 8  # B2
    sub = subsystem(system, I)
    assert sub.labels == ("s1", "s2") and sub.m(0, 1) == 4


def test_exchange_witness():
    system = named_system("A3")
    # s1 * (s2 s1) = (s2 s1) * s2
    b = system.normal_form((1, 0))
    assert exchange_witness(b, 0, 1) == system.normal_form((0, 1, 0))
    with pytest.raises(CoxeterError):
        exchange_witness(system.gen(0), 0, 0)  # s b not reduced


def test_validate_system_errors():
    with pytest.raises(CoxeterError):
        validate_system([[1, 3], [2, 1]])  # asymmetric
    with pytest.raises(CoxeterError):
        validate_system([[2, 3], [3, 1]])  # bad diagonal
    with pytest.raises(CoxeterError):
        validate_system([[1, 1], [1, 1]])  # off-diagonal < 2
    with pytest.raises(CoxeterError):
        validate_system([])


def test_system_from_json_and_load():
    doc = {"rank": 2, "m": [[1, None], [None, 1]], "labels": ["u", "v"]}
    system = system_from_json(json.dumps(doc))
    assert system.m(0, 1) is None
    assert load_system("B2").matrix == named_system("B2").matrix
    loaded = load_system(json.dumps(doc))
    assert loaded.labels == ("u", "v")


def test_parse_and_word_str_roundtrip():
    system = named_system("D4")
    word = system.parse_word("s2' s3 s2 s4")
    assert system.word_str(word) == "s2' s3 s2 s4"
    with pytest.raises(CoxeterError):
        system.parse_word("s9")


def test_descents_match_definition():
    system = named_system("A3")
    for w in system.elements():
        rights = {s for s in range(3) if len(w * system.gen(s)) < len(w)}
        lefts = {s for s in range(3) if len(system.gen(s) * w) < len(w)}
        assert w.descents("right") == frozenset(rights)
        assert w.descents("left") == frozenset(lefts)
