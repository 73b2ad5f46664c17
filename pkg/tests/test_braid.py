from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from strategies import braid_words
from vbraid.braid import (
    BGen,
    BraidSyntaxError,
    BraidWord,
    Perm,
    S,
    format_word,
    free_cancel,
    invert_word,
    parse_word,
    perm_to_word,
    relation_rewrite,
    s,
    t,
    underlying_perm,
    vb2_normal_form,
)


def test_parse_examples():
    assert parse_word("S2 s1 s2", 3).gens == (S(2), s(1), s(2))
    assert parse_word("", 4) == BraidWord(4)
    assert parse_word("t3 s2 t1 S2", 4).gens == (t(3), s(2), t(1), S(2))
    assert len(parse_word("(t3 s2 t1 S2)^3", 4)) == 12
    assert parse_word("(s1)^-2", 2).gens == (S(1), S(1))


@pytest.mark.parametrize("text, n", [("T1", 3), ("s3", 3), ("s0", 3), ("x1", 3), ("(s1", 3), ("s1)", 3)])
def test_parse_errors(text, n):
    with pytest.raises(BraidSyntaxError):
        parse_word(text, n)


def test_tau_has_no_sign():
    with pytest.raises(ValueError):
        BGen("t", 1, -1)


@given(braid_words())
def test_format_round_trip(w):
    assert parse_word(format_word(w), w.strands) == w


def test_invert_examples():
    assert invert_word(BraidWord(2, (s(1),))).gens == (S(1),)
    assert invert_word(BraidWord(3, (t(2), s(1)))).gens == (S(1), t(2))
    assert invert_word(BraidWord(3)) == BraidWord(3)


def test_free_cancel_examples():
    assert free_cancel(BraidWord(2, (s(1), S(1)))) == BraidWord(2)
    assert free_cancel(BraidWord(3, (t(1), t(1), t(2)))).gens == (t(2),)
    assert free_cancel(BraidWord(3, (s(1), t(2), t(2), S(1)))) == BraidWord(3)


@given(braid_words())
def test_free_cancel_word_times_inverse(w):
    assert free_cancel(w + invert_word(w)) == BraidWord(w.strands)
    out = free_cancel(w).gens
    assert all(out[k + 1] != out[k].inverse for k in range(len(out) - 1))


def test_underlying_perm_examples():
    assert underlying_perm(parse_word("S2 s1 s2", 3)) == Perm((3, 2, 1))
    assert underlying_perm(BraidWord(5)).is_identity()
    assert underlying_perm(parse_word("t1", 2)) == Perm((2, 1))


@given(braid_words(n=4), braid_words(n=4))
def test_underlying_perm_is_homomorphic(u, v):
    assert underlying_perm(u + v) == underlying_perm(u) * underlying_perm(v)


@given(st.permutations(range(1, 6)))
def test_perm_to_word_realizes_perm(images):
    p = Perm(tuple(images))
    assert underlying_perm(perm_to_word(p)) == p


def _rewrites_to(word, target, n):
    w = parse_word(word, n)
    goal = parse_word(target, n)
    return any(relation_rewrite(w, seed) == goal for seed in range(300))


def test_relation_rewrite_examples():
    assert _rewrites_to("s1 s3", "s3 s1", 4)
    assert _rewrites_to("t2 s1 t2", "t1 s2 t1", 3)
    assert _rewrites_to("s1 s2 s1", "s2 s1 s2", 3)


def test_relation_rewrite_is_deterministic():
    w = parse_word("s1 t2 S1 s2", 3)
    assert relation_rewrite(w, 17) == relation_rewrite(w, 17)


@given(braid_words(), st.integers(0, 2**32))
def test_rewrite_preserves_perm(w, seed):
    assert underlying_perm(relation_rewrite(w, seed)) == underlying_perm(w)


def test_vb2_normal_form_examples():
    assert vb2_normal_form(parse_word("s1 t1 t1", 2)) == (1,)
    assert vb2_normal_form(parse_word("t1 s1 S1 t1", 2)) == (0,)
    assert vb2_normal_form(parse_word("s1 t1 S1", 2)) == (1, -1)
    with pytest.raises(ValueError):
        vb2_normal_form(BraidWord(3))


@settings(max_examples=500)
@given(braid_words(n=2), st.integers(0, 2**32))
def test_vb2_normal_form_rewrite_invariant(w, seed):
    rng = random.Random(seed)
    v = w
    for _ in range(rng.randint(1, 5)):
        v = relation_rewrite(v, rng.randrange(2**32))
    assert vb2_normal_form(v) == vb2_normal_form(w)
