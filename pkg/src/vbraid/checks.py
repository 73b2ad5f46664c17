"""
Pinned fixtures and randomized invariant suites shared by ``vbraid selftest`` and
``vbraid fuzz``. Each check returns ``(name, ok, detail)``.
"""

from __future__ import annotations

import random
from typing import Callable, Iterator

from . import braid as b
from .action import act_perm, act_sigma, act_word, coordinates, coordinates_of_endo, top_braid
from .freegroup import pretty_word
from .reduce import is_trivial, normalize, perm_equivalent, reduction_step, undraw, words_equal
from .reps import RepKind, is_kernel_element, psi_from_vcd, word_endo
from .vcd import Vcd, canonicalize, complexity, excursion_notation, o_vector, terminal_over_arcs, validate

Result = tuple[str, bool, str]

STUCK_WORD = "t1 t2 s2 t2 s1 t1"
STUCK_NOTATION = "curve(b=1): .P2 | curve(b=2): g1 ^g2 .P3 | curve(b=3): g2 ^g3 .P1"
STUCK_BM = ("q^2 x2 q^-2", "x2 q x3 q^-1 x2^-1", "x3 q^-3 x1 q^3 x3^-1")
KERNEL_WORD = "(t3 s2 t1 S2)^3"


def _w(text: str, n: int) -> b.BraidWord:
    return b.parse_word(text, n)


def _coords(text: str, n: int) -> str:
    return str(coordinates(act_word(_w(text, n))))


def stuck_example() -> Vcd:
    """Three curves a, b, c with upper order c3 b1 a1 b2 c1 b3 c2 and no terminal over arcs."""
    a0, b0, c0 = 100, 101, 102
    a1, b1, b2, b3, c1, c2, c3 = 1, 11, 12, 13, 21, 22, 23
    return Vcd((c3, b1, a1, b2, c1, b3, c2), (a0, b0, c0), ((a0, a1), (b0, b1, b2, b3), (c0, c1, c2, c3)))


def _gen_images(kind: RepKind, word: str, n: int) -> tuple[str, ...]:
    f = word_endo(kind, _w(word, n))
    return tuple(pretty_word(f.image(g)) for g in f.generators())


def fixtures() -> Iterator[Result]:
    ex = stuck_example()
    v = validate(ex)
    yield "example diagram validates", v is None, str(v or "")
    yield "example complexity", o_vector(ex) == (0, 1, 1) and complexity(ex) == 2, str(o_vector(ex))
    over = {tuple(ex.endpoints(a)) for a in ex.over_arcs()}
    yield "example over arcs", over == {(11, 12), (21, 22)}, str(sorted(over))
    bad = Vcd((23, 11, 1, 21, 12, 13, 22), ex.base, ex.curves)
    v = validate(bad)
    yield "interleaving over arcs rejected", v is not None and v.clause == "over-arc-planarity", str(v)

    imgs = _gen_images(RepKind.ARTIN, "s1", 2)
    yield "phi(s1)", imgs == ("x1 x2 x1^-1", "x1"), ", ".join(imgs)
    imgs = _gen_images(RepKind.WELDED, "t1", 2)
    yield "welded(t1)", imgs == ("x2", "x1"), ", ".join(imgs)
    imgs = _gen_images(RepKind.BM, "t1", 2)
    yield "bm(t1)", imgs == ("q", "q x2 q^-1", "q^-1 x1 q"), ", ".join(imgs)

    c = _coords("S2 s1 s2", 3)
    yield "coordinates of S2 s1 s2", c == "(x1<x3>, x1 x3^-1<x2>, <x1>)", c

    c1, c2 = _coords("t2 s1 s2", 3), _coords("s1 s2 t1", 3)
    eq = words_equal(_w("t2 s1 s2", 3), _w("s1 s2 t1", 3))
    yield "t2 s1 s2 vs s1 s2 t1", c1 == c2 == "(x1<x3>, x1<x2>, <x1>)" and not eq, f"{c1} {c2} equal={eq}"

    d = act_word(_w(STUCK_WORD, 3))
    note = excursion_notation(d)
    ok = note == STUCK_NOTATION and d == canonicalize(ex) and not terminal_over_arcs(d)
    yield "no-terminal-over-arc example diagram", ok, note
    yield "example has empty top braid", len(top_braid(d)) == 0, ""
    tb = top_braid(act_word(_w("S2 s1", 3)))
    yield "top braid of S2 s1", words_equal(tb, _w("S2 s1", 3)), str(tb)

    f = word_endo(RepKind.BM, _w(STUCK_WORD, 3))
    imgs = tuple(pretty_word(f.image(j)) for j in (1, 2, 3))
    yield "bm images of the example", imgs == STUCK_BM, ", ".join(imgs)
    yield "bm read off the example diagram", psi_from_vcd(d) == f, ""

    k = _w(KERNEL_WORD, 4)
    yield "bm kernel element", is_kernel_element(RepKind.BM, k) and not is_trivial(k), KERNEL_WORD

    same = word_endo(RepKind.WELDED, _w("t2 s1 s2", 3)) == word_endo(RepKind.WELDED, _w("s1 s2 t1", 3))
    yield "welded images agree", same, ""

    welded_kernel = _w("t2 s1 s2 t1 S2 S1", 3)
    ok = is_kernel_element(RepKind.WELDED, welded_kernel) and not is_trivial(welded_kernel)
    yield "welded kernel word is nontrivial", ok, str(welded_kernel)

    rng = random.Random(0)
    ok = True
    for _ in range(20):
        e = act_word(b.random_word(3, 8, rng))
        ok &= act_sigma(act_sigma(e, 1, -1), 1, 1) == e
    yield "s1 . (S1 . D) == D", ok, "20 random diagrams"

    rels = {(("s1", "s3"), ("s3", "s1")), (("t2", "s1", "t2"), ("t1", "s2", "t1")), (("s1", "s2", "s1"), ("s2", "s1", "s2"))}
    ok = all(words_equal(_w(" ".join(l), 4), _w(" ".join(r), 4)) for l, r in rels)
    yield "relations hold", ok, ""

    back = undraw(d)
    yield "undraw the example", back is not None and words_equal(back, _w(STUCK_WORD, 3)), str(back)


def _random_word(rng: random.Random, max_n: int, max_len: int, classical: bool = False) -> b.BraidWord:
    n = rng.randint(2, max_n)
    return b.random_word(n, rng.randint(0, max_len), rng, classical)


def relation_suite(rng: random.Random, cases: int) -> Result:
    for _ in range(cases):
        w = _random_word(rng, 6, 12)
        d = act_word(w)
        for lhs, rhs in b._relations(w.strands):
            if act_word(b.BraidWord(w.strands, lhs), d) != act_word(b.BraidWord(w.strands, rhs), d):
                return "relations", False, f"{' '.join(map(str, lhs))} = {' '.join(map(str, rhs))} on {w}"
    return "relations", True, f"{cases} diagrams"


def rewrite_suite(rng: random.Random, cases: int) -> Result:
    for _ in range(cases):
        w = _random_word(rng, 5, 15)
        v = w
        for _ in range(20):
            v = b.relation_rewrite(v, rng.randrange(2**32))
        if act_word(w) != act_word(v):
            return "rewriting", False, f"{w} vs {v}"
    return "rewriting", True, f"{cases} words"


def welded_suite(rng: random.Random, cases: int) -> Result:
    for _ in range(cases):
        w = _random_word(rng, 5, 15)
        if coordinates(act_word(w)) != coordinates_of_endo(word_endo(RepKind.WELDED, w)):
            return "welded coordinates", False, str(w)
    return "welded coordinates", True, f"{cases} words"


def bm_reading_suite(rng: random.Random, cases: int) -> Result:
    for _ in range(cases):
        w = _random_word(rng, 4, 10)
        if psi_from_vcd(act_word(w)) != word_endo(RepKind.BM, w):
            return "bm reading", False, str(w)
    return "bm reading", True, f"{cases} words"


def undraw_suite(rng: random.Random, cases: int) -> Result:
    for _ in range(cases):
        w = _random_word(rng, 5, 15)
        u = undraw(act_word(w))
        if u is None or not words_equal(u, w):
            return "undraw", False, str(w)
    return "undraw", True, f"{cases} words"


def complexity_suite(rng: random.Random, cases: int) -> Result:
    for _ in range(cases):
        d = act_word(_random_word(rng, 5, 15))
        step = reduction_step(d, rng)
        if step is not None and complexity(step[1]) >= complexity(d):
            return "complexity", False, f"sigma step {step[0]}"
        p = b.Perm(tuple(rng.sample(range(1, d.n + 1), d.n)))
        if complexity(act_perm(p, d)) != complexity(d):
            return "complexity", False, f"perm {p}"
    return "complexity", True, f"{cases} diagrams"


def confluence_suite(rng: random.Random, cases: int) -> Result:
    for _ in range(cases):
        d = act_word(_random_word(rng, 5, 15))
        ref = normalize(d).minimal
        for _ in range(3):
            if not perm_equivalent(ref, normalize(d, random.Random(rng.randrange(2**32))).minimal):
                return "confluence", False, str(d)
    return "confluence", True, f"{cases} diagrams"


def arc_creation_suite(rng: random.Random, cases: int) -> Result:
    done = 0
    while done < cases:
        d = act_word(_random_word(rng, 5, 12))
        i, sign = rng.randint(1, d.n - 1), rng.choice((1, -1))
        types = {a.type for a in terminal_over_arcs(d)}
        if ((i + 1, i) if sign > 0 else (i, i + 1)) in types:
            continue
        done += 1
        want = (i, i + 1) if sign > 0 else (i + 1, i)
        if want not in {a.type for a in terminal_over_arcs(act_sigma(d, i, sign))}:
            return "terminal arc creation", False, f"{d} i={i} sign={sign}"
    return "terminal arc creation", True, f"{cases} diagrams"


SUITES: dict[str, Callable[[random.Random, int], Result]] = {
    "relations": relation_suite,
    "rewriting": rewrite_suite,
    "welded": welded_suite,
    "bm-reading": bm_reading_suite,
    "undraw": undraw_suite,
    "complexity": complexity_suite,
    "confluence": confluence_suite,
    "arc-creation": arc_creation_suite,
}

