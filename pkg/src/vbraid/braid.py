"""
Virtual braid words, their permutations, and a relation-rewriting generator.

Word order: ``g1 g2 ... gk`` acts on a diagram as ``g1 . (g2 . ( ... (gk . D)))``;
the leftmost letter is the top of the braid diagram.

Permutation convention: ``Perm.images[k - 1] == p(k)`` is the slot to which the
strand (or block) at slot ``k`` is carried. Composition ``p * q`` is ``p o q``, so
``underlying_perm(u + v) == underlying_perm(u) * underlying_perm(v)``.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
import re
from typing import Iterable, Iterator, Sequence

SIGMA = "s"
TAU = "t"


class BraidSyntaxError(ValueError):
    pass


@dataclasses.dataclass(frozen=True, order=True)
class BGen:
    kind: str   # "s" or "t"
    index: int  # 1-based
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (SIGMA, TAU):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == TAU and self.sign != 1:
            raise ValueError("tau generators carry no sign")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.index < 1:
            raise ValueError("generator index must be >= 1")

    @property
    def inverse(self) -> BGen:
        return self if self.kind == TAU else BGen(SIGMA, self.index, -self.sign)

    def __str__(self) -> str:
        if self.kind == TAU:
            return f"t{self.index}"
        return f"{'s' if self.sign > 0 else 'S'}{self.index}"


def s(i: int) -> BGen:
    return BGen(SIGMA, i, 1)


def S(i: int) -> BGen:
    return BGen(SIGMA, i, -1)


def t(i: int) -> BGen:
    return BGen(TAU, i)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    gens: tuple[BGen, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.index >= self.strands:
                raise BraidSyntaxError(f"{g} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[BGen]:
        return iter(self.gens)

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("strand count mismatch")
        return BraidWord(self.strands, self.gens + other.gens)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return invert_word(self) ** (-k)
        return BraidWord(self.strands, self.gens * k)

    def __str__(self) -> str:
        return format_word(self)

    def is_classical(self) -> bool:
        return all(g.kind == SIGMA for g in self.gens)


_TOKEN = re.compile(r"\s*(?:(\()|(\))(?:\^(-?\d+))?|([sSt])(\d+)|(\S+))")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse e.g. ``"S2 s1 s2"`` or ``"(t3 s2 t1 S2)^3"``."""
    stack: list[list[BGen]] = [[]]
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        lpar, rpar, power, kind, idx, junk = m.groups()
        if junk is not None:
            raise BraidSyntaxError(f"unknown token {junk!r}")
        if lpar:
            stack.append([])
        elif rpar:
            if len(stack) == 1:
                raise BraidSyntaxError("unbalanced ')'")
            group = BraidWord(n, stack.pop())
            stack[-1].extend((group ** int(power if power is not None else 1)).gens)
        else:
            i = int(idx)
            if not 1 <= i < n:
                raise BraidSyntaxError(f"generator index {i} out of range for n={n}")
            stack[-1].append(BGen(TAU, i) if kind == "t" else BGen(SIGMA, i, 1 if kind == "s" else -1))
    if len(stack) != 1:
        raise BraidSyntaxError("unbalanced '('")
    return BraidWord(n, stack[0])


def format_word(w: BraidWord) -> str:
    return " ".join(str(g) for g in w.gens)


def invert_word(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(g.inverse for g in reversed(w.gens)))


def free_cancel(w: BraidWord) -> BraidWord:
    """Delete adjacent inverse pairs (including tau_i tau_i) until none remain."""
    stack: list[BGen] = []
    for g in w.gens:
        if stack and stack[-1] == g.inverse:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.strands, tuple(stack))


@dataclasses.dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Perm:
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Perm) -> Perm:
        return Perm(tuple(self(other(k)) for k in range(1, other.n + 1)))

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"


def all_perms(n: int) -> Iterator[Perm]:
    for p in itertools.permutations(range(1, n + 1)):
        yield Perm(p)


def underlying_perm(w: BraidWord) -> Perm:
    p = Perm.identity(w.strands)
    for g in w.gens:
        p = p * Perm.transposition(w.strands, g.index)
    return p


def perm_to_word(p: Perm) -> BraidWord:
    """A tau-word with underlying permutation p, read off from a bubble sort of p."""
    # Sort the sequence p(1..n); each adjacent swap at position i peels t_i off the right.
    seq = list(p.images)
    swaps = []
    for end in range(len(seq) - 1, 0, -1):
        for i in range(end):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                swaps.append(i + 1)
    return BraidWord(p.n, tuple(t(i) for i in reversed(swaps)))


# ---------------------------------------------------------------------------
# Relation rewriting


def _relations(n: int) -> list[tuple[tuple[BGen, ...], tuple[BGen, ...]]]:
    """Defining relations of VB_n as (lhs, rhs) pairs, signs expanded."""
    rels: list[tuple[tuple[BGen, ...], tuple[BGen, ...]]] = []
    idx = range(1, n)
    for i in idx:
        rels.append(((t(i), t(i)), ()))
    for i, j in itertools.product(idx, idx):
        if abs(i - j) > 1:
            for e, f in itertools.product((1, -1), repeat=2):
                rels.append(((BGen(SIGMA, i, e), BGen(SIGMA, j, f)), (BGen(SIGMA, j, f), BGen(SIGMA, i, e))))
            if i < j:
                rels.append(((t(i), t(j)), (t(j), t(i))))
            for e in (1, -1):
                rels.append(((BGen(SIGMA, i, e), t(j)), (t(j), BGen(SIGMA, i, e))))
    for i in range(1, n - 1):
        for e in (1, -1):
            a, b = BGen(SIGMA, i, e), BGen(SIGMA, i + 1, e)
            rels.append(((a, b, a), (b, a, b)))
            rels.append(((t(i + 1), a, t(i + 1)), (t(i), b, t(i))))
        rels.append(((t(i), t(i + 1), t(i)), (t(i + 1), t(i), t(i + 1))))
    return rels


def all_generators(n: int) -> list[BGen]:
    gens = []
    for i in range(1, n):
        gens += [s(i), S(i), t(i)]
    return gens


def relation_rewrite(w: BraidWord, seed: int) -> BraidWord:
    """One random application of a defining relation (either direction), or an
    insertion/deletion of an inverse pair. The result equals ``w`` in VB_n."""
    rng = random.Random(seed)
    gens = list(w.gens)
    n = w.strands
    replacements = []
    for lhs, rhs in _relations(n):
        for a, b in ((lhs, rhs), (rhs, lhs)):
            k = len(a)
            for pos in range(len(gens) - k + 1):
                if tuple(gens[pos:pos + k]) == a:
                    replacements.append((pos, k, b))
    for pos in range(len(gens) - 1):
        if gens[pos + 1] == gens[pos].inverse:
            replacements.append((pos, 2, ()))
    if replacements and rng.random() < 0.75:
        pos, k, b = rng.choice(replacements)
        return BraidWord(n, tuple(gens[:pos]) + tuple(b) + tuple(gens[pos + k:]))
    if n < 2:
        return w
    g = rng.choice(all_generators(n))
    pos = rng.randrange(len(gens) + 1)
    return BraidWord(n, tuple(gens[:pos]) + (g, g.inverse) + tuple(gens[pos:]))


def random_word(n: int, length: int, rng: random.Random, classical: bool = False) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    alphabet = [g for g in all_generators(n) if not (classical and g.kind == TAU)]
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(length)))


def enumerate_words(n: int, max_len: int, alphabet: Sequence[BGen] | None = None) -> Iterable[BraidWord]:
    alphabet = list(alphabet) if alphabet is not None else all_generators(n)
    for length in range(max_len + 1):
        for gens in itertools.product(alphabet, repeat=length):
            yield BraidWord(n, gens)


# ---------------------------------------------------------------------------
# VB_2 = Z * Z/2


def vb2_normal_form(w: BraidWord) -> tuple[int, ...]:
    """Exponents (a0, a1, ..., ak) of the reduced form s1^a0 t1 s1^a1 t1 ... s1^ak."""
    if w.strands != 2:
        raise ValueError("vb2_normal_form needs a 2-strand word")
    exps = [0]
    for g in w.gens:
        if g.kind == SIGMA:
            exps[-1] += g.sign
        elif len(exps) > 1 and exps[-1] == 0:
            exps.pop()
        else:
            exps.append(0)
    return tuple(exps)
