"""
Virtual curve diagrams.

A diagram is stored as the raw poset data: the upper chain (left to right), the
base chain (left to right) and ``n`` curves. Each curve is a sequence of point
ids starting at a base point, followed by upper points; its last point is the
terminal point (a puncture). Along a curve ``a0 a1 ... ar`` the arc ``(a0, a1)`` is
the base arc, arcs ``(a_{2k-1}, a_{2k})`` are over arcs and ``(a_{2k}, a_{2k+1})``
are under arcs. Over arcs live above the upper line and may not interleave; under
and base arcs live below it and may cross freely.

Arcs are addressed by ``ArcRef(curve, index)`` where ``index`` ``j`` names the arc
``(a_{j-1}, a_j)``; ``j == 1`` is the base arc, even ``j`` over, odd ``j >= 3`` under.
"""

from __future__ import annotations

import dataclasses
import functools
import json
from typing import Iterator

BASE = "base"
OVER = "over"
UNDER = "under"


class VcdError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class Violation:
    clause: str
    points: tuple[int, ...] = ()
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.clause}: {self.detail} {list(self.points)}".strip()


@dataclasses.dataclass(frozen=True)
class ArcRef:
    curve: int
    index: int


@dataclasses.dataclass(frozen=True)
class Vcd:
    upper: tuple[int, ...]
    base: tuple[int, ...]
    curves: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "curves", tuple(tuple(c) for c in self.curves))

    @property
    def n(self) -> int:
        return len(self.curves)

    @functools.cached_property
    def upper_pos(self) -> dict[int, int]:
        return {p: k for k, p in enumerate(self.upper)}

    @functools.cached_property
    def base_pos(self) -> dict[int, int]:
        return {p: k for k, p in enumerate(self.base)}

    @functools.cached_property
    def terminals(self) -> tuple[int, ...]:
        """Terminal points in upper order; ``terminals[s - 1]`` is the puncture at slot s."""
        return tuple(sorted((c[-1] for c in self.curves), key=self.upper_pos.__getitem__))

    @functools.cached_property
    def slot_of(self) -> dict[int, int]:
        return {p: s for s, p in enumerate(self.terminals, start=1)}

    def curve_ending_at_slot(self, slot: int) -> int:
        term = self.terminals[slot - 1]
        return next(k for k, c in enumerate(self.curves) if c[-1] == term)

    def curve_order(self) -> list[int]:
        """Curve indices sorted by the base order of their first point."""
        return sorted(range(self.n), key=lambda k: self.base_pos[self.curves[k][0]])

    def arcs(self) -> Iterator[ArcRef]:
        for k, c in enumerate(self.curves):
            for j in range(1, len(c)):
                yield ArcRef(k, j)

    def endpoints(self, a: ArcRef) -> tuple[int, int]:
        c = self.curves[a.curve]
        if not 1 <= a.index < len(c):
            raise VcdError(f"arc {a} out of range")
        return c[a.index - 1], c[a.index]

    def over_arcs(self) -> Iterator[ArcRef]:
        for k, c in enumerate(self.curves):
            for j in range(2, len(c), 2):
                yield ArcRef(k, j)

    def under_arcs(self) -> Iterator[ArcRef]:
        for k, c in enumerate(self.curves):
            for j in range(3, len(c), 2):
                yield ArcRef(k, j)

    def span(self, a: ArcRef) -> tuple[int, int]:
        """Upper-order positions (lo, hi) of an over or under arc."""
        p, q = self.endpoints(a)
        i, j = self.upper_pos[p], self.upper_pos[q]
        return (i, j) if i < j else (j, i)

    def num_points(self) -> int:
        return len(self.upper) + len(self.base)

    def to_json(self) -> dict:
        return {"n": self.n, "upper": list(self.upper), "base": list(self.base),
                "curves": [list(c) for c in self.curves]}

    @classmethod
    def from_json(cls, data: dict | str) -> Vcd:
        if isinstance(data, str):
            data = json.loads(data)
        d = cls(tuple(data["upper"]), tuple(data["base"]), tuple(tuple(c) for c in data["curves"]))
        if "n" in data and data["n"] != d.n:
            raise VcdError(f"declared n={data['n']} but found {d.n} curves")
        return d

    def __str__(self) -> str:
        return excursion_notation(self)


def arc_kind(d: Vcd, a: ArcRef) -> tuple[str, bool]:
    """Classify an arc by parity; the flag says whether it is the terminal arc."""
    d.endpoints(a)
    j = a.index
    kind = BASE if j == 1 else OVER if j % 2 == 0 else UNDER
    return kind, j == len(d.curves[a.curve]) - 1


def _interleave(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (p, q), (r, s) = sorted(a), sorted(b)
    return p < r < q < s or r < p < s < q


def validate(d: Vcd) -> Violation | None:
    """Return the first violated clause of the definition, or None."""
    upper, base = set(d.upper), set(d.base)
    if len(upper) != len(d.upper):
        return Violation("upper-chain", detail="repeated upper point")
    if len(base) != len(d.base):
        return Violation("base-chain", detail="repeated base point")
    if upper & base:
        return Violation("disjoint-chains", tuple(sorted(upper & base)), "points on both lines")
    if len(d.curves) != len(d.base):
        return Violation("curve-count", detail=f"{len(d.curves)} curves but {len(d.base)} base points")
    seen: set[int] = set()
    for c in d.curves:
        if len(c) < 2:
            return Violation("curve-length", tuple(c), "a curve needs at least two points")
        if c[0] not in base:
            return Violation("curve-start", (c[0],), "curve does not start at a base point")
        for p in c[1:]:
            if p not in upper:
                return Violation("curve-upper", (p,), "non-initial curve point is not an upper point")
        dup = seen.intersection(c)
        if dup or len(set(c)) != len(c):
            return Violation("curve-disjoint", tuple(sorted(dup or c)), "point on more than one curve")
        seen.update(c)
    missing = (upper | base) - seen
    if missing:
        return Violation("curve-cover", tuple(sorted(missing)), "point on no curve")
    spans = [(d.span(a), d.endpoints(a)) for a in d.over_arcs()]
    # sweep: over arcs must form a non-crossing matching on the upper line
    closing: dict[int, tuple[int, int]] = {}
    for sp, ends in spans:
        closing[sp[0]] = sp
        closing[sp[1]] = sp
    stack: list[tuple[int, int]] = []
    for k in range(len(d.upper)):
        sp = closing.get(k)
        if sp is None:
            continue
        if sp[0] == k:
            stack.append(sp)
        else:
            top = stack.pop()
            if top != sp:
                pts = tuple(d.upper[i] for i in (*top, *sp))
                return Violation("over-arc-planarity", pts, "over arcs interleave")
    return None


def check(d: Vcd) -> Vcd:
    v = validate(d)
    if v is not None:
        raise VcdError(str(v))
    return d


def trivial_diagram(n: int) -> Vcd:
    if n < 1:
        raise VcdError("need at least one curve")
    return Vcd(tuple(range(n)), tuple(range(n, 2 * n)), tuple((n + k, k) for k in range(n)))


def encloses(d: Vcd, a: ArcRef, p: int) -> bool:
    kind, _ = arc_kind(d, a)
    if kind == BASE:
        raise VcdError("base arcs enclose nothing")
    if p not in d.upper_pos:
        raise VcdError(f"{p} is not an upper point")
    lo, hi = d.span(a)
    return lo < d.upper_pos[p] < hi


def crosses(d: Vcd, a: ArcRef, b: ArcRef) -> bool:
    ka, _ = arc_kind(d, a)
    kb, _ = arc_kind(d, b)
    if OVER in (ka, kb):
        raise VcdError("over arcs never cross")
    if a == b:
        return False
    if ka == UNDER and kb == UNDER:
        return _interleave(d.span(a), d.span(b))
    if ka == BASE and kb == BASE:
        (p, q), (r, s) = d.endpoints(a), d.endpoints(b)
        bp, up = d.base_pos, d.upper_pos
        return (bp[p] < bp[r]) != (up[q] < up[s])
    under, basearc = (a, b) if ka == UNDER else (b, a)
    lo, hi = d.span(under)
    top = d.upper_pos[d.endpoints(basearc)[1]]
    return lo < top < hi


def is_free_under_arc(d: Vcd, a: ArcRef) -> bool:
    kind, _ = arc_kind(d, a)
    if kind != UNDER:
        raise VcdError("not an under arc")
    below = [b for b in d.arcs() if arc_kind(d, b)[0] != OVER and b != a]
    if any(crosses(d, a, b) for b in below):
        return False
    lo, hi = d.span(a)
    inside = [b for b in d.under_arcs() if b != a and lo < d.span(b)[0] and d.span(b)[1] < hi]
    return not any(crosses(d, b, c) for i, b in enumerate(inside) for c in inside[i + 1:])


# ---------------------------------------------------------------------------
# Moves


def _adjacent(d: Vcd, p: int, q: int) -> bool:
    return abs(d.upper_pos[p] - d.upper_pos[q]) == 1


def _remove(d: Vcd, curve: int, drop: set[int]) -> Vcd:
    curves = list(d.curves)
    curves[curve] = tuple(p for p in curves[curve] if p not in drop)
    return Vcd(tuple(p for p in d.upper if p not in drop), d.base, tuple(curves))


def can_t_move(d: Vcd, c: int) -> bool:
    cv = d.curves[c]
    return len(cv) >= 3 and _adjacent(d, cv[-2], cv[-1])


def t_move(d: Vcd, c: int) -> Vcd:
    """Delete the terminal point of curve c when its terminal arc is trivial."""
    if not can_t_move(d, c):
        raise VcdError(f"no T-move on curve {c}")
    return _remove(d, c, {d.curves[c][-1]})


def can_b_move(d: Vcd, c: int, pos: int) -> bool:
    cv = d.curves[c]
    return 1 <= pos and pos + 2 < len(cv) and _adjacent(d, cv[pos], cv[pos + 1])


def b_move(d: Vcd, c: int, pos: int) -> Vcd:
    """Delete points ``curve[pos]`` and ``curve[pos + 1]`` when they are adjacent."""
    if not can_b_move(d, c, pos):
        raise VcdError(f"no B-move on curve {c} at {pos}")
    cv = d.curves[c]
    return _remove(d, c, {cv[pos], cv[pos + 1]})


def available_moves(d: Vcd) -> list[tuple[str, int, int]]:
    moves = []
    for c in range(d.n):
        if can_t_move(d, c):
            moves.append(("T", c, len(d.curves[c]) - 1))
        for pos in range(1, len(d.curves[c]) - 2):
            if can_b_move(d, c, pos):
                moves.append(("B", c, pos))
    return moves


def apply_move(d: Vcd, move: tuple[str, int, int]) -> Vcd:
    kind, c, pos = move
    return t_move(d, c) if kind == "T" else b_move(d, c, pos)


def is_simplified(d: Vcd) -> bool:
    return not available_moves(d)


def simplify(d: Vcd) -> Vcd:
    """Apply point-removing T and B moves until none is available."""
    # Doubly linked upper line and curves, so that moves are O(1) and only pairs
    # near a deletion need rechecking.
    up_prev: dict[int, int | None] = {}
    up_next: dict[int, int | None] = {}
    for i, p in enumerate(d.upper):
        up_prev[p] = d.upper[i - 1] if i else None
        up_next[p] = d.upper[i + 1] if i + 1 < len(d.upper) else None
    c_prev: dict[int, int | None] = {}
    c_next: dict[int, int | None] = {}
    for c in d.curves:
        for j, p in enumerate(c):
            c_prev[p] = c[j - 1] if j else None
            c_next[p] = c[j + 1] if j + 1 < len(c) else None
    alive = set(d.upper)

    def unlink_upper(p):
        a, b = up_prev[p], up_next[p]
        if a is not None:
            up_next[a] = b
        if b is not None:
            up_prev[b] = a
        alive.discard(p)
        return a, b

    work = [p for c in d.curves for p in c[1:-1]]
    while work:
        p = work.pop()
        if p not in alive or c_prev[p] is None:
            continue
        q = c_next[p]
        if q is None or (up_next[p] != q and up_prev[p] != q):
            continue
        before, after = c_prev[p], c_next[q]
        if after is None:
            # T-move: q is the terminal point
            touched = unlink_upper(q)
            c_next[p] = None
            work.append(before)
        else:
            touched = unlink_upper(p) + unlink_upper(q)
            c_next[before], c_prev[after] = after, before
            work.append(before)
        for t in touched:
            if t is not None and t in alive:
                work.append(t)
                if c_prev[t] is not None:
                    work.append(c_prev[t])
    curves = []
    for c in d.curves:
        out, p = [], c[0]
        while p is not None:
            out.append(p)
            p = c_next[p]
        curves.append(tuple(out))
    new_upper = tuple(p for p in d.upper if p in alive)
    return Vcd(new_upper, d.base, tuple(curves))


def relabel(d: Vcd) -> Vcd:
    """Rename upper points 0..m-1 in upper order, base points m.. in base order,
    and list curves in base order."""
    m = len(d.upper)
    ren = {p: k for k, p in enumerate(d.upper)}
    ren.update({p: m + k for k, p in enumerate(d.base)})
    curves = sorted((tuple(ren[p] for p in c) for c in d.curves), key=lambda c: c[0])
    return Vcd(tuple(range(m)), tuple(range(m, m + len(d.base))), tuple(curves))


def canonicalize(d: Vcd) -> Vcd:
    return relabel(simplify(d))


# ---------------------------------------------------------------------------
# Complexity and terminal over arcs


def o_vector(d: Vcd) -> tuple[int, ...]:
    """Number of over arcs strictly enclosing each puncture, on the simplified diagram."""
    e = simplify(d)
    spans = [e.span(a) for a in e.over_arcs()]
    out = []
    for t in e.terminals:
        k = e.upper_pos[t]
        out.append(sum(1 for lo, hi in spans if lo < k < hi))
    return tuple(out)


def complexity(d: Vcd) -> int:
    return sum(o_vector(d))


@dataclasses.dataclass(frozen=True)
class TerminalOverArc:
    arc: ArcRef
    source: int  # slot whose puncture the arc encloses
    target: int  # slot at which the arc terminates

    @property
    def type(self) -> tuple[int, int]:
        return (self.source, self.target)

    @property
    def index(self) -> int:
        """The i of type (i, i+1) or (i+1, i)."""
        return min(self.source, self.target)

    @property
    def rightward(self) -> bool:
        """True for type (i, i+1)."""
        return self.target == self.source + 1


def terminal_over_arcs(d: Vcd) -> list[TerminalOverArc]:
    if not is_simplified(d):
        raise VcdError("terminal over arcs are classified on simplified diagrams only")
    out = []
    for k, c in enumerate(d.curves):
        r = len(c) - 1
        if r >= 2 and r % 2 == 0:
            slot = d.slot_of[c[-1]]
            src = slot - 1 if d.upper_pos[c[-2]] < d.upper_pos[c[-1]] else slot + 1
            if not 1 <= src <= d.n:
                raise VcdError("terminal over arc encloses no puncture")
            p = d.upper_pos[d.terminals[src - 1]]
            lo, hi = d.span(ArcRef(k, r))
            if not lo < p < hi:
                raise VcdError("terminal over arc does not enclose its neighbouring puncture")
            out.append(TerminalOverArc(ArcRef(k, r), src, slot))
    out.sort(key=lambda a: d.upper_pos[d.curves[a.arc.curve][-1]])
    return out


# ---------------------------------------------------------------------------
# Excursion notation


def _gap_index(d: Vcd) -> list[int]:
    """For each upper position, the number of punctures strictly to its left."""
    out, seen = [], 0
    for p in d.upper:
        out.append(seen)
        if p in d.slot_of:
            seen += 1
    return out


def curve_tokens(d: Vcd, k: int) -> list[str]:
    gaps = _gap_index(d)
    c = d.curves[k]
    toks = []
    for j, p in enumerate(c[1:], start=1):
        if p in d.slot_of and j == len(c) - 1:
            name = f"P{d.slot_of[p]}"
        else:
            name = f"g{gaps[d.upper_pos[p]]}"
        if j == 1:
            toks.append("." + name if name.startswith("P") else name)
        else:
            toks.append(("^" if j % 2 == 0 else ".") + name)
    return toks


def excursion_notation(d: Vcd) -> str:
    """One ``curve(b=k): ...`` clause per curve in base order, joined by `` | ``."""
    parts = []
    for b, k in enumerate(d.curve_order(), start=1):
        parts.append(f"curve(b={b}): " + " ".join(curve_tokens(d, k)))
    return " | ".join(parts)
