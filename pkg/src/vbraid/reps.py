"""
Free group representations of virtual braids.

* ``ARTIN`` - Artin's action on F_n (classical generators only).
* ``WELDED`` - the naive extension: tau_i swaps x_i and x_{i+1}.
* ``BM`` - the extension to F_{n+1} = <x_1..x_n, q> in which tau_i conjugates by q.

``word_endo`` composes generator images in word order, so the endomorphism of
``u v`` is ``endo(u) o endo(v)``.
"""

from __future__ import annotations

import enum
import math

from . import freegroup as fg
from .braid import SIGMA, BGen, BraidWord
from .freegroup import Q, FreeEndo, GroupWord
from .vcd import Vcd, canonicalize


class RepKind(enum.Enum):
    ARTIN = "phi"
    WELDED = "welded"
    BM = "bm"

    @property
    def has_q(self) -> bool:
        return self is RepKind.BM


def _w(rank: int, has_q: bool, *letters: tuple[int, int]) -> GroupWord:
    return GroupWord(tuple(letters), rank, has_q)


def generator_endo(kind: RepKind, g: BGen, n: int) -> FreeEndo:
    if not 1 <= g.index < n:
        raise ValueError(f"{g} out of range for n={n}")
    hq = kind.has_q
    i = g.index
    if g.kind == SIGMA:
        # sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        f = FreeEndo.from_map(n, hq, {i: _w(n, hq, (i, 1), (i + 1, 1), (i, -1)), i + 1: _w(n, hq, (i, 1))})
        if g.sign < 0:
            # inverse: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            f = FreeEndo.from_map(n, hq, {i: _w(n, hq, (i + 1, 1)),
                                          i + 1: _w(n, hq, (i + 1, -1), (i, 1), (i + 1, 1))})
        return f
    if kind is RepKind.ARTIN:
        raise ValueError("the Artin representation has no virtual generators")
    if kind is RepKind.WELDED:
        return FreeEndo.from_map(n, False, {i: _w(n, False, (i + 1, 1)), i + 1: _w(n, False, (i, 1))})
    return FreeEndo.from_map(n, True, {i: _w(n, True, (Q, 1), (i + 1, 1), (Q, -1)),
                                       i + 1: _w(n, True, (Q, -1), (i, 1), (Q, 1))})


def word_endo(kind: RepKind, w: BraidWord) -> FreeEndo:
    f = FreeEndo.identity(w.strands, kind.has_q)
    for g in w.gens:
        f = fg.compose_endo(f, generator_endo(kind, g, w.strands))
    return f


def is_kernel_element(kind: RepKind, w: BraidWord) -> bool:
    return word_endo(kind, w).is_identity()


# ---------------------------------------------------------------------------
# Reading the BM representation off a diagram (experimental)
#
# Canonical drawing: upper points at x = 0, 1, 2, ... on the line y = 0, base
# points at x = 0, 1, 2, ... (scaled to the same width) on y = -H with H large;
# base arcs are straight segments, under arcs are lower semicircles. Each curve is
# walked from its base point; a crossing with a piece of any curve oriented from
# our right to our left contributes q, the other way q^-1, and passing over the
# puncture at slot j left to right contributes x_j (x_j^-1 right to left).


def _base_x(d: Vcd) -> dict[int, float]:
    m = max(len(d.upper) - 1, 1)
    nb = max(len(d.base) - 1, 1)
    return {b: k * m / nb for k, b in enumerate(d.base)}


def _pieces(d: Vcd):
    """Below-the-line pieces as (curve, arc index, kind, data)."""
    bx = _base_x(d)
    pos = d.upper_pos
    out = []
    for k, c in enumerate(d.curves):
        out.append((k, 1, "seg", (bx[c[0]], float(pos[c[1]]))))
        for j in range(3, len(c), 2):
            out.append((k, j, "arc", (float(pos[c[j - 1]]), float(pos[c[j]]))))
    return out


def _seg_point(data, H, s):
    x0, x1 = data
    return (x0 + (x1 - x0) * s, -H * (1 - s))


def _arc_point(data, theta):
    a, b = data
    m, r = (a + b) / 2, abs(b - a) / 2
    return (m + r * math.cos(theta), -r * math.sin(theta))


def _arc_param(data, t):
    """Angle at fraction t along the semicircle traversed from a to b."""
    a, b = data
    return math.pi * (1 - t) if a < b else math.pi * t


def _intersections(p1, p2, H):
    """Parameter pairs (t1, t2) in (0, 1) where two below-line pieces cross."""
    k1, d1 = p1[2], p1[3]
    k2, d2 = p2[2], p2[3]
    if k1 == "seg" and k2 == "seg":
        (a0, a1), (b0, b1) = d1, d2
        if (a0 - b0) * (a1 - b1) >= 0:
            return []
        # solve a0 + (a1-a0) s = b0 + (b1-b0) s
        s = (b0 - a0) / ((a1 - a0) - (b1 - b0))
        return [(s, s)]
    if k1 == "arc" and k2 == "arc":
        (a, b), (c, e) = sorted(d1), sorted(d2)
        if not (a < c < b < e or c < a < e < b):
            return []
        m1, r1 = (a + b) / 2, (b - a) / 2
        m2, r2 = (c + e) / 2, (e - c) / 2
        x = (r1 ** 2 - r2 ** 2 + m2 ** 2 - m1 ** 2) / (2 * (m2 - m1))
        y = -math.sqrt(max(r1 ** 2 - (x - m1) ** 2, 0.0))
        return [(_frac_on_arc(d1, x, y), _frac_on_arc(d2, x, y))]
    if k1 == "arc":
        return [(u, v) for v, u in _intersections(p2, p1, H)]
    (x0, x1), (a, b) = d1, d2
    lo, hi = sorted((a, b))
    if not lo < x1 < hi:
        return []
    m, r = (a + b) / 2, abs(b - a) / 2
    # point on segment: (x0 + (x1-x0)s, -H(1-s)); solve |pt - (m,0)| = r near s = 1
    dx, dy = x1 - x0, H
    px, py = x0 - m, -H
    A = dx * dx + dy * dy
    B = 2 * (px * dx + py * dy)
    C = px * px + py * py - r * r
    disc = math.sqrt(max(B * B - 4 * A * C, 0.0))
    roots = [s for s in ((-B - disc) / (2 * A), (-B + disc) / (2 * A)) if 0 < s < 1]
    s = min(roots)
    x, y = _seg_point(d1, H, s)
    return [(s, _frac_on_arc(d2, x, y))]


def _frac_on_arc(data, x, y):
    a, b = data
    m = (a + b) / 2
    theta = math.atan2(-y, x - m)
    return 1 - theta / math.pi if a < b else theta / math.pi


def _tangent(piece, t, H):
    kind, data = piece[2], piece[3]
    if kind == "seg":
        x0, x1 = data
        return (x1 - x0, H)
    theta = _arc_param(data, t)
    a, b = data
    r = abs(b - a) / 2
    # derivative of (m + r cos th, -r sin th) w.r.t. travel direction
    dth = -math.pi if a < b else math.pi
    return (-r * math.sin(theta) * dth, -r * math.cos(theta) * dth)


def psi_from_vcd(d: Vcd) -> FreeEndo:
    """Experimental: read the BM representation off the canonical drawing of d."""
    d = canonicalize(d)
    n = d.n
    H = 4.0 * (len(d.upper) + 1) ** 2
    pieces = _pieces(d)
    by_curve: dict[int, list] = {}
    for p in pieces:
        by_curve.setdefault(p[0], []).append(p)
    crossings: dict[tuple[int, int], list[tuple[float, int]]] = {}
    for p1 in pieces:
        for p2 in pieces:
            if p1 is p2:
                continue
            for t1, t2 in _intersections(p1, p2, H):
                v1, v2 = _tangent(p1, t1, H), _tangent(p2, t2, H)
                cross = v1[0] * v2[1] - v1[1] * v2[0]
                crossings.setdefault((p1[0], p1[1]), []).append((t1, 1 if cross > 0 else -1))
    pos = d.upper_pos
    tpos = [pos[t] for t in d.terminals]
    images = {}
    for out_slot, k in enumerate(d.curve_order(), start=1):
        c = d.curves[k]
        letters: list[tuple[int, int]] = []
        for j in range(1, len(c)):
            if j % 2 == 0:
                a, b = pos[c[j - 1]], pos[c[j]]
                if a < b:
                    letters += [(s, 1) for s, tp in enumerate(tpos, 1) if a < tp < b]
                else:
                    letters += [(s, -1) for s, tp in reversed(list(enumerate(tpos, 1))) if b < tp < a]
            else:
                for _, sign in sorted(crossings.get((k, j), [])):
                    letters.append((Q, sign))
        u = GroupWord(tuple(letters), n, True)
        slot = d.slot_of[c[-1]]
        images[out_slot] = u * GroupWord(((slot, 1),), n, True) * ~u
    return FreeEndo.from_map(n, True, images)
