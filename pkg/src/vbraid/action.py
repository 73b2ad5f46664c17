"""
The left action of VB_n on virtual curve diagrams.

sigma_i: the puncture at slot i is pushed along a path above the upper line,
over everything up to and including the puncture at slot i+1, and lands
immediately to the right of it. Every over arc separating the start of the path
from its end is dragged along as a finger wrapped around the landing point;
a finger shows up as an over/under/over detour whose under dip straddles the new
puncture. Fingers are nested in the order the path meets the arcs: the first arc
met is innermost. sigma_i^-1 is the mirror image of sigma_{n-i}.

Permutations: the upper line is cut into blocks, block 0 being everything left of
the first puncture and block k the puncture at slot k together with everything
up to the next puncture. A permutation moves the blocks rigidly; over arcs that
cross a cut between blocks that are separated are dipped below the line there
(the outermost arc dips closest to the cut), and the pieces are reconnected by
under arcs.

Every result is simplified and relabelled, so equal classes give equal values.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Sequence

from . import freegroup as fg
from .braid import SIGMA, TAU, BGen, BraidWord, Perm, invert_word
from .vcd import Vcd, VcdError, canonicalize, check, is_simplified, terminal_over_arcs, trivial_diagram

DEBUG_VALIDATE = False


class DiagramTooLarge(VcdError):
    pass


def _fresh(d: Vcd) -> itertools.count:
    return itertools.count(max(itertools.chain(d.upper, d.base)) + 1)


def _rebuild_curves(curves: Sequence[Sequence[int]], detours: dict[tuple[int, int], list[int]]) -> list[list[int]]:
    """Insert ``detours[(a, b)]`` between consecutive points a, b of any curve;
    a detour registered for (a, b) is inserted reversed when the curve runs b -> a."""
    out = []
    for c in curves:
        new = [c[0]]
        for a, b in zip(c, c[1:]):
            if (a, b) in detours:
                new.extend(detours[(a, b)])
            elif (b, a) in detours:
                new.extend(reversed(detours[(b, a)]))
            new.append(b)
        out.append(new)
    return out


def _finish(upper: Sequence[int], base: Sequence[int], curves: Sequence[Sequence[int]]) -> Vcd:
    d = Vcd(tuple(upper), tuple(base), tuple(tuple(c) for c in curves))
    if DEBUG_VALIDATE:
        check(d)
    return canonicalize(d)


def mirror(d: Vcd) -> Vcd:
    """Reflect the picture left to right (reverses both lines)."""
    return Vcd(tuple(reversed(d.upper)), tuple(reversed(d.base)), d.curves)


def _push_right(d: Vcd, i: int) -> Vcd:
    """sigma_i . d for a canonical diagram d."""
    pos = d.upper_pos
    P, Q = d.terminals[i - 1], d.terminals[i]
    A = d.curve_ending_at_slot(i)
    cA = d.curves[A]
    a_over = len(cA) >= 3 and (len(cA) - 1) % 2 == 0
    p0, x0 = pos[P], pos[Q] + 0.5

    inner_first, outer_first = [], []  # arcs around the start / around the landing point
    for arc in d.over_arcs():
        if a_over and arc.curve == A and arc.index == len(cA) - 1:
            continue
        lo, hi = d.span(arc)
        around_start = lo < p0 < hi
        if around_start == (lo < x0 < hi):
            continue
        (inner_first if around_start else outer_first).append((lo, hi))
    inner_first.sort(key=lambda sp: -sp[0])
    outer_first.sort(key=lambda sp: sp[0])

    fresh = _fresh(d)
    x = next(fresh)
    lefts, rights = [], []
    detours = {}
    sack = [(sp, True) for sp in inner_first] + [(sp, False) for sp in outer_first]
    for (lo, hi), starts_around in sack:
        l, r = next(fresh), next(fresh)
        lefts.append(l)
        rights.append(r)
        u, v = d.upper[lo], d.upper[hi]
        detours[(u, v)] = [r, l] if starts_around else [l, r]
    k = pos[Q] + 1
    upper = list(d.upper[:k]) + lefts[::-1] + [x] + rights + list(d.upper[k:])
    curves = _rebuild_curves(d.curves, detours)
    if a_over:
        upper.remove(P)
        curves[A][-1] = x
    else:
        curves[A].append(x)
    return _finish(upper, d.base, curves)


def act_sigma(d: Vcd, i: int, sign: int = 1) -> Vcd:
    n = d.n
    if not 1 <= i < n:
        raise VcdError(f"sigma_{i} out of range for {n} curves")
    d = canonicalize(d)
    if sign > 0:
        return _push_right(d, i)
    return canonicalize(mirror(_push_right(canonicalize(mirror(d)), n - i)))


def act_perm(p: Perm, d: Vcd) -> Vcd:
    """Rigidly move block k (the puncture at slot k and what follows it) to slot p(k)."""
    n = d.n
    if p.n != n:
        raise VcdError("permutation size does not match the diagram")
    d = canonicalize(d)
    if p.is_identity():
        return d
    pos = d.upper_pos
    tpos = [pos[t] for t in d.terminals]
    bounds = [0] + tpos + [len(d.upper)]
    blocks = [list(d.upper[bounds[k]:bounds[k + 1]]) for k in range(n + 1)]

    # cut k sits just left of the puncture at slot k, between blocks k-1 and k
    def joined(k: int) -> bool:
        return p(k) == 1 if k == 1 else p(k) == p(k - 1) + 1

    cuts = [k for k in range(1, n + 1) if not joined(k)]
    spans = [d.span(a) for a in d.over_arcs()]
    fresh = _fresh(d)
    pieces: dict[tuple[int, int], list[int]] = {}
    tail: dict[int, list[int]] = {k: [] for k in range(n + 1)}
    head: dict[int, list[int]] = {k: [] for k in range(n + 1)}
    for k in cuts:
        c = tpos[k - 1]
        crossing = sorted((sp for sp in spans if sp[0] < c <= sp[1]), key=lambda sp: -sp[0])
        for sp in crossing:  # innermost first
            left, right = next(fresh), next(fresh)
            tail[k - 1].append(left)
            head[k].insert(0, right)
            pieces.setdefault(sp, []).extend([left, right])
    detours = {(d.upper[lo], d.upper[hi]): pts for (lo, hi), pts in pieces.items()}
    upper = head[0] + blocks[0] + tail[0]
    inv = p.inverse()
    for slot in range(1, n + 1):
        k = inv(slot)
        upper += head[k] + blocks[k] + tail[k]
    return _finish(upper, d.base, _rebuild_curves(d.curves, detours))


def act_generator(g: BGen, d: Vcd) -> Vcd:
    if g.index >= d.n:
        raise VcdError(f"{g} out of range for {d.n} curves")
    if g.kind == SIGMA:
        return act_sigma(d, g.index, g.sign)
    return act_perm(Perm.transposition(d.n, g.index), d)


def act_word(w: BraidWord, d: Vcd | None = None, max_points: int | None = None) -> Vcd:
    """``g1 g2 ... gk . d = g1 . (g2 . ( ... (gk . d)))``; defaults to the trivial diagram.

    Diagram size can grow exponentially with word length; ``max_points`` aborts
    with DiagramTooLarge once an intermediate diagram exceeds it."""
    if d is None:
        d = trivial_diagram(w.strands)
    if w.strands != d.n:
        raise VcdError(f"word on {w.strands} strands acting on a diagram with {d.n} curves")
    d = canonicalize(d)
    for k, g in enumerate(reversed(w.gens)):
        d = act_generator(g, d)
        if max_points is not None and d.num_points() > max_points:
            raise DiagramTooLarge(f"{d.num_points()} points after {k + 1} of {len(w)} letters")
    return d


def braid_diagram(w: BraidWord) -> Vcd:
    return act_word(w, trivial_diagram(w.strands))


# ---------------------------------------------------------------------------
# Top braid


def top_braid(d: Vcd) -> BraidWord:
    """The classical braid t(d): peel terminal over arcs until none remain."""
    if not is_simplified(d):
        raise VcdError("top_braid needs a simplified diagram")
    d = canonicalize(d)
    peeled: list[BGen] = []
    while True:
        arcs = terminal_over_arcs(d)
        if not arcs:
            break
        a = arcs[0]
        g = BGen(SIGMA, a.index, -1 if a.rightward else 1)
        d = act_generator(g, d)
        peeled.append(g)
    # d_final = g_m ... g_1 . d, so d = (g_m ... g_1)^-1 . d_final
    return invert_word(BraidWord(d.n, tuple(reversed(peeled))))


# ---------------------------------------------------------------------------
# Coordinates


@dataclasses.dataclass(frozen=True)
class Coordinates:
    perm: Perm
    reps: tuple[fg.GroupWord, ...]

    def __str__(self) -> str:
        parts = []
        for j, u in enumerate(self.reps, start=1):
            core = fg.pretty_word(u) if u.letters else ""
            parts.append(f"{core}<x{self.perm(j)}>")
        return "(" + ", ".join(parts) + ")"


def over_word(d: Vcd, k: int) -> fg.GroupWord:
    """x-letters read along curve k: x_j for passing left to right over the puncture at slot j."""
    c = d.curves[k]
    pos = d.upper_pos
    tpos = [pos[t] for t in d.terminals]
    letters = []
    for j in range(2, len(c), 2):
        a, b = pos[c[j - 1]], pos[c[j]]
        if a < b:
            letters += [(s, 1) for s, tp in enumerate(tpos, 1) if a < tp < b]
        else:
            letters += [(s, -1) for s, tp in reversed(list(enumerate(tpos, 1))) if b < tp < a]
    return fg.GroupWord(tuple(letters), d.n)


def coordinates(d: Vcd) -> Coordinates:
    d = canonicalize(d)
    reps, images = [], []
    for k in d.curve_order():
        slot = d.slot_of[d.curves[k][-1]]
        images.append(slot)
        reps.append(fg.coset_normalize(over_word(d, k), slot))
    return Coordinates(Perm(tuple(images)), tuple(reps))


def coordinates_of_endo(f: fg.FreeEndo) -> Coordinates:
    """Read (U_j, pi(j)) off images of the form U x_pi(j) U^-1 (q letters are kept)."""
    images, reps = [], []
    for j in range(1, f.rank + 1):
        w = f.image(j).letters
        if len(w) % 2 == 0:
            raise ValueError(f"image of x{j} is not a conjugate of a generator")
        m = len(w) // 2
        gen, sign = w[m]
        if gen == fg.Q or sign != 1:
            raise ValueError(f"image of x{j} is not a conjugate of a generator")
        images.append(gen)
        u = fg.GroupWord(w[:m], f.rank, f.has_q)
        reps.append(fg.coset_normalize(u, gen))
    return Coordinates(Perm(tuple(images)), tuple(reps))
