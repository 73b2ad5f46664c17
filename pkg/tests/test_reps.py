from __future__ import annotations

import pytest
from hypothesis import given, settings

from strategies import braid_words
from vbraid.action import act_word, coordinates_of_endo
from vbraid.braid import BraidWord, parse_word, s, t, underlying_perm, _relations
from vbraid.checks import stuck_example
from vbraid.freegroup import FreeEndo, compose_endo, parse_word as fw, pretty_word
from vbraid.reduce import is_trivial
from vbraid.reps import RepKind, generator_endo, is_kernel_element, psi_from_vcd, word_endo


def images(f):
    return [pretty_word(f.image(g)) for g in f.generators()]


def test_generator_images():
    assert images(generator_endo(RepKind.BM, t(1), 2)) == ["q", "q x2 q^-1", "q^-1 x1 q"]
    assert images(generator_endo(RepKind.WELDED, t(1), 2)) == ["x2", "x1"]
    assert images(generator_endo(RepKind.ARTIN, s(1), 2)) == ["x1 x2 x1^-1", "x1"]


def test_artin_rejects_tau():
    with pytest.raises(ValueError):
        generator_endo(RepKind.ARTIN, t(1), 2)
    with pytest.raises(ValueError):
        generator_endo(RepKind.WELDED, s(3), 3)


def test_word_images():
    f = word_endo(RepKind.BM, parse_word("t1 t2 s2 t2 s1 t1", 3))
    assert images(f) == ["q", "q^2 x2 q^-2", "x2 q x3 q^-1 x2^-1", "x3 q^-3 x1 q^3 x3^-1"]
    a = word_endo(RepKind.WELDED, parse_word("t2 s1 s2", 3))
    assert a == word_endo(RepKind.WELDED, parse_word("s1 s2 t1", 3))
    c = coordinates_of_endo(word_endo(RepKind.ARTIN, parse_word("S2 s1 s2", 3)))
    assert str(c) == "(x1<x3>, x1 x3^-1<x2>, <x1>)"


def test_kernel_element():
    assert is_kernel_element(RepKind.BM, parse_word("(t3 s2 t1 S2)^3", 4))
    for k in (1, 2):
        assert not is_kernel_element(RepKind.BM, parse_word(f"(t3 s2 t1 S2)^{k}", 4))
    assert not is_trivial(parse_word("(t3 s2 t1 S2)^3", 4))


def test_welded_kernel_gap():
    w = parse_word("t2 s1 s2 t1 S2 S1", 3)
    assert is_kernel_element(RepKind.WELDED, w)
    assert not is_kernel_element(RepKind.BM, w)
    assert not is_trivial(w)


@given(braid_words(max_n=4, max_len=6), braid_words(max_n=4, max_len=6))
def test_homomorphism(u, v):
    if u.strands != v.strands:
        return
    for kind in (RepKind.WELDED, RepKind.BM):
        assert word_endo(kind, u + v) == compose_endo(word_endo(kind, u), word_endo(kind, v))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relations_map_to_equal_endos(n):
    for lhs, rhs in _relations(n):
        l, r = BraidWord(n, lhs), BraidWord(n, rhs)
        for kind in (RepKind.WELDED, RepKind.BM):
            assert word_endo(kind, l) == word_endo(kind, r)
        if l.is_classical() and r.is_classical():
            assert word_endo(RepKind.ARTIN, l) == word_endo(RepKind.ARTIN, r)


@given(braid_words(max_n=5, max_len=10))
def test_images_are_conjugates_of_permuted_generators(w):
    f = word_endo(RepKind.WELDED, w)
    c = coordinates_of_endo(f)
    assert c.perm == underlying_perm(w).inverse() or c.perm == underlying_perm(w)
    g = word_endo(RepKind.BM, w)
    x_part = [next(x for x, _ in g.image(j).letters[len(g.image(j)) // 2:][:1]) for j in range(1, w.strands + 1)]
    assert x_part == list(c.perm.images)


def test_psi_from_vcd_fixtures():
    d = stuck_example()
    assert psi_from_vcd(d) == word_endo(RepKind.BM, parse_word("t1 t2 s2 t2 s1 t1", 3))
    assert psi_from_vcd(act_word(BraidWord(4))) == FreeEndo.identity(4, True)


@settings(max_examples=200, deadline=None)
@given(braid_words(max_n=4, max_len=10))
def test_psi_from_vcd_matches_formula(w):
    assert psi_from_vcd(act_word(w)) == word_endo(RepKind.BM, w)


def test_bm_acts_trivially_on_q():
    f = word_endo(RepKind.BM, parse_word("t1 s2 t2 S1", 3))
    assert f.image(0) == fw("q", 3, True)
