"""
Complexity-reducing rewriting of diagrams and the word problem.

A reduction step removes one terminal over arc by acting with sigma_i^-1 (arc
reaching its puncture from the left) or sigma_i (from the right). When no terminal
over arc exists, a permutation of the blocks may expose one; the search for it is
exhaustive over S_n. Diagrams related by a permutation are called equivalent
(``perm_equivalent``).

``normalize`` runs the rewriting to the end and records enough to rebuild the
input: ``act_word(trace.extracted_word, trace.minimal) == d``.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import logging
import random
from typing import Optional

from .action import act_generator, act_perm, act_word
from .braid import SIGMA, BGen, BraidWord, Perm, all_perms, invert_word, perm_to_word
from .vcd import Vcd, VcdError, canonicalize, complexity, is_simplified, terminal_over_arcs, trivial_diagram

log = logging.getLogger(__name__)


def digest(d: Vcd) -> str:
    """Short content hash of the canonical form."""
    blob = json.dumps(canonicalize(d).to_json(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclasses.dataclass(frozen=True)
class ReductionStep:
    kind: str                     # "sigma" or "perm"
    before: str
    after: str
    gen: Optional[BGen] = None
    perm: Optional[Perm] = None

    def undo_word(self, n: int) -> BraidWord:
        """The word taking the ``after`` diagram back to ``before``."""
        if self.kind == "sigma":
            return BraidWord(n, (self.gen.inverse,))
        return perm_to_word(self.perm.inverse())

    def to_json(self) -> dict:
        out = {"kind": self.kind, "before": self.before, "after": self.after}
        if self.gen is not None:
            out["gen"] = str(self.gen)
        if self.perm is not None:
            out["perm"] = list(self.perm.images)
        return out


@dataclasses.dataclass(frozen=True)
class ReductionTrace:
    start: Vcd
    steps: tuple[ReductionStep, ...]
    minimal: Vcd
    extracted_word: BraidWord

    def to_json(self) -> dict:
        return {
            "start": digest(self.start),
            "steps": [s.to_json() for s in self.steps],
            "minimal": self.minimal.to_json(),
            "extracted_word": str(self.extracted_word),
        }


def reduction_step(d: Vcd, rng: random.Random | None = None) -> tuple[BGen, Vcd] | None:
    """Remove one terminal over arc; the leftmost one unless ``rng`` picks at random."""
    if not is_simplified(d):
        raise VcdError("reduction_step needs a simplified diagram")
    arcs = terminal_over_arcs(d)
    if not arcs:
        return None
    a = rng.choice(arcs) if rng is not None else arcs[0]
    g = BGen(SIGMA, a.index, -1 if a.rightward else 1)
    return g, act_generator(g, d)


def intact(p: Perm, i: int) -> bool:
    if not 1 <= i < p.n:
        raise ValueError(f"index {i} out of range for S_{p.n}")
    return p(i + 1) == p(i) + 1


_perm_cache: dict[Vcd, tuple[Perm, ...]] = {}


def reducing_perms(d: Vcd) -> tuple[Perm, ...]:
    """All non-identity permutations p for which p . d has a terminal over arc."""
    d = canonicalize(d)
    hit = _perm_cache.get(d)
    if hit is None:
        hit = tuple(p for p in all_perms(d.n) if not p.is_identity() and terminal_over_arcs(act_perm(p, d)))
        if len(_perm_cache) > 20000:
            _perm_cache.clear()
        _perm_cache[d] = hit
    return hit


def find_perm_with_reduction(d: Vcd, rng: random.Random | None = None) -> Perm | None:
    perms = reducing_perms(d)
    if not perms:
        return None
    return rng.choice(perms) if rng is not None else perms[0]


def normalize(d: Vcd, rng: random.Random | None = None) -> ReductionTrace:
    """Reduce until neither a step nor a permutation-assisted step applies.

    With ``rng`` given, ties between terminal over arcs and between reducing
    permutations are broken at random; the end result is the same up to
    ``perm_equivalent``.
    """
    start = canonicalize(d)
    d = start
    steps: list[ReductionStep] = []
    last_was_perm = False
    while True:
        r = reduction_step(d, rng)
        if r is not None:
            g, nxt = r
            steps.append(ReductionStep("sigma", digest(d), digest(nxt), gen=g))
            d, last_was_perm = nxt, False
            continue
        p = find_perm_with_reduction(d, rng)
        if p is None:
            break
        if last_was_perm:
            log.warning("two permutation steps in a row at %s", digest(d))
        nxt = act_perm(p, d)
        steps.append(ReductionStep("perm", digest(d), digest(nxt), perm=p))
        d, last_was_perm = nxt, True
    word = BraidWord(start.n)
    for step in steps:
        word = word + step.undo_word(start.n)
    return ReductionTrace(start, tuple(steps), d, word)


def perm_relating(a: Vcd, b: Vcd) -> Perm | None:
    """Some p with p . a == b, if one exists."""
    a, b = canonicalize(a), canonicalize(b)
    if a.n != b.n:
        return None
    for p in all_perms(a.n):
        if act_perm(p, a) == b:
            return p
    return None


def perm_equivalent(a: Vcd, b: Vcd) -> bool:
    return perm_relating(a, b) is not None


def undraw(d: Vcd) -> BraidWord | None:
    """A braid word w with w . I_n == d, or None when d is not in the orbit of I_n."""
    trace = normalize(d)
    p = perm_relating(trivial_diagram(d.n), trace.minimal)
    if p is None:
        return None
    return trace.extracted_word + perm_to_word(p)


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise ValueError(f"strand mismatch: {u.strands} vs {v.strands}")
    return act_word(u) == act_word(v)


def is_trivial(w: BraidWord) -> bool:
    return act_word(w) == trivial_diagram(w.strands)


def check_trace(trace: ReductionTrace) -> bool:
    """Re-verify a trace: complexities never increase and the word rebuilds the start."""
    c = [complexity(trace.start)]
    d = trace.start
    for step in trace.steps:
        d = act_word(invert_word(step.undo_word(d.n)), d)
        if digest(d) != step.after:
            return False
        c.append(complexity(d))
    if any(b > a for a, b in zip(c, c[1:])):
        return False
    return act_word(trace.extracted_word, trace.minimal) == trace.start
