from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from strategies import group_words
from vbraid import braid as b
from vbraid.freegroup import (
    FreeEndo,
    GroupWord,
    MalformedWord,
    Q,
    apply_endo,
    compose_endo,
    coset_normalize,
    format_word,
    identity,
    invert,
    multiply,
    parse_word,
    pretty_word,
    reduce_word,
)
from vbraid.reps import RepKind, generator_endo, word_endo


def W(text, rank=3, has_q=False):
    return parse_word(text, rank, has_q)


@pytest.mark.parametrize("text, expected", [
    ("x1 X1", ""),
    ("x1 x2 X2 x3", "x1 x3"),
    ("q q Q x1", "q x1"),
])
def test_reduce(text, expected):
    assert W(text, has_q=True) == W(expected, has_q=True)


def test_reduce_rejects_out_of_range():
    with pytest.raises(MalformedWord):
        reduce_word([(4, 1)], 3)
    with pytest.raises(MalformedWord):
        reduce_word([(Q, 1)], 3)
    with pytest.raises(MalformedWord):
        parse_word("y1", 3)


@pytest.mark.parametrize("a, c, expected", [
    ("x1 x2", "X2", "x1"),
    ("x1", "x1", "x1 x1"),
    ("x1 X3", "x3 x2", "x1 x2"),
])
def test_multiply(a, c, expected):
    assert multiply(W(a), W(c)) == W(expected)


def test_multiply_rank_mismatch():
    with pytest.raises(ValueError):
        multiply(W("x1"), parse_word("x1", 4))


@pytest.mark.parametrize("a, expected", [("x1 x2", "X2 X1"), ("", ""), ("q X3", "x3 Q")])
def test_invert(a, expected):
    assert invert(W(a, has_q=True)) == W(expected, has_q=True)


def test_apply_artin_generator():
    f = generator_endo(RepKind.ARTIN, b.s(1), 2)
    assert apply_endo(f, W("x1", 2)) == W("x1 x2 X1", 2)
    assert apply_endo(f, W("x2", 2)) == W("x1", 2)
    assert apply_endo(FreeEndo.identity(2), W("x1 x2", 2)) == W("x1 x2", 2)


def test_compose_examples():
    phi = lambda g: generator_endo(RepKind.ARTIN, g, 3)
    assert compose_endo(phi(b.s(1)), phi(b.S(1))).is_identity()
    t = generator_endo(RepKind.WELDED, b.t(1), 3)
    assert compose_endo(t, t).is_identity()
    f = compose_endo(compose_endo(phi(b.S(2)), phi(b.s(1))), phi(b.s(2)))
    assert f.image(2) == W("x1 X3 x2 x3 X1")


@pytest.mark.parametrize("u, k, expected", [("x1 X3 x2 x2", 2, "x1 X3"), ("x1", 3, "x1"), ("x2 X2", 1, "")])
def test_coset_normalize(u, k, expected):
    assert coset_normalize(W(u), k) == W(expected)


def test_formatting():
    w = W("q q x2 Q Q", has_q=True)
    assert format_word(w) == "q q x2 Q Q"
    assert pretty_word(w) == "q^2 x2 q^-2"
    assert pretty_word(identity(3)) == "1"
    assert str(W("x1 X2")) == "x1 X2"


def test_endo_equality_ignores_q_only_when_absent():
    assert FreeEndo.identity(2, True) != FreeEndo.identity(2, False)
    assert FreeEndo.identity(2) == FreeEndo.from_map(2, False, {1: W("x1", 2)})


@given(group_words(has_q=True))
def test_reduction_idempotent_and_unit(a):
    assert GroupWord(a.letters, a.rank, a.has_q) == a
    e = identity(a.rank, a.has_q)
    assert multiply(a, e) == a == multiply(e, a)
    assert multiply(a, invert(a)).is_identity()


@given(group_words(), group_words())
def test_inverse_of_product(a, c):
    assert invert(multiply(a, c)) == multiply(invert(c), invert(a))


@given(group_words(), st.integers(1, 3), st.sampled_from((1, -1)))
def test_coset_normalize_absorbs_generator(u, k, e):
    assert coset_normalize(multiply(u, GroupWord(((k, e),), 3)), k) == coset_normalize(u, k)


_gens3 = b.all_generators(3)


@given(st.lists(st.sampled_from(_gens3), max_size=4), st.lists(st.sampled_from(_gens3), max_size=4),
       group_words(has_q=True))
def test_compose_matches_sequential_application(f_gens, g_gens, w):
    f = word_endo(RepKind.BM, b.BraidWord(3, tuple(f_gens)))
    g = word_endo(RepKind.BM, b.BraidWord(3, tuple(g_gens)))
    assert apply_endo(compose_endo(f, g), w) == apply_endo(f, apply_endo(g, w))
