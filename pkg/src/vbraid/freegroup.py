"""
Free group words over x_1..x_n and an optional extra generator q.

A letter is a pair ``(gen, sign)`` where ``gen`` is a 1-based index for x_gen,
or 0 for q, and ``sign`` is +1 or -1. Every word is stored freely reduced.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping

Letter = tuple[int, int]

Q = 0


class MalformedWord(ValueError):
    pass


def _check_letter(letter: Letter, rank: int, has_q: bool) -> None:
    gen, sign = letter
    if sign not in (1, -1):
        raise MalformedWord(f"bad sign in letter {letter}")
    if gen == Q:
        if not has_q:
            raise MalformedWord("q is not a generator of this free group")
    elif not 1 <= gen <= rank:
        raise MalformedWord(f"generator x{gen} out of range for rank {rank}")


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, sign in letters:
        if stack and stack[-1] == (gen, -sign):
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


@dataclasses.dataclass(frozen=True)
class GroupWord:
    letters: tuple[Letter, ...]
    rank: int
    has_q: bool = False

    def __post_init__(self):
        for letter in self.letters:
            _check_letter(letter, self.rank, self.has_q)
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return multiply(self, other)

    def __invert__(self) -> GroupWord:
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    def is_identity(self) -> bool:
        return not self.letters


def reduce_word(letters: Iterable[Letter], rank: int, has_q: bool = False) -> GroupWord:
    return GroupWord(tuple(letters), rank, has_q)


def identity(rank: int, has_q: bool = False) -> GroupWord:
    return GroupWord((), rank, has_q)


def generator(gen: int, rank: int, has_q: bool = False, sign: int = 1) -> GroupWord:
    return GroupWord(((gen, sign),), rank, has_q)


def _check_compatible(a: GroupWord, b: GroupWord) -> None:
    if a.rank != b.rank or a.has_q != b.has_q:
        raise ValueError(f"rank mismatch: ({a.rank}, q={a.has_q}) vs ({b.rank}, q={b.has_q})")


def multiply(a: GroupWord, b: GroupWord) -> GroupWord:
    _check_compatible(a, b)
    return GroupWord(a.letters + b.letters, a.rank, a.has_q)


def invert(a: GroupWord) -> GroupWord:
    return GroupWord(tuple((g, -s) for g, s in reversed(a.letters)), a.rank, a.has_q)


def coset_normalize(u: GroupWord, k: int) -> GroupWord:
    """Canonical representative of the right coset u<x_k>: drop trailing x_k^{+-1}."""
    letters = list(u.letters)
    while letters and letters[-1][0] == k:
        letters.pop()
    return GroupWord(tuple(letters), u.rank, u.has_q)


def parse_word(text: str, rank: int, has_q: bool = False) -> GroupWord:
    """Parse ``"x1 X2 q Q"``; capital letters are inverses, empty text is the identity."""
    letters = []
    for tok in text.split():
        head, tail = tok[0], tok[1:]
        if head in "qQ" and not tail:
            letters.append((Q, 1 if head == "q" else -1))
        elif head in "xX" and tail.isdigit():
            letters.append((int(tail), 1 if head == "x" else -1))
        else:
            raise MalformedWord(f"unknown token {tok!r}")
    return GroupWord(tuple(letters), rank, has_q)


def format_word(w: GroupWord) -> str:
    toks = []
    for gen, sign in w.letters:
        if gen == Q:
            toks.append("q" if sign > 0 else "Q")
        else:
            toks.append(("x" if sign > 0 else "X") + str(gen))
    return " ".join(toks)


def pretty_word(w: GroupWord) -> str:
    """Compact exponent notation, e.g. ``q^2 x2 q^-2``; ``1`` for the identity."""
    if not w.letters:
        return "1"
    out = []
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        gen, sign = letters[i]
        name = "q" if gen == Q else f"x{gen}"
        power = sign * (j - i)
        out.append(name if power == 1 else f"{name}^{power}")
        i = j
    return " ".join(out)


@dataclasses.dataclass(frozen=True)
class FreeEndo:
    """Endomorphism given by the images of x_1..x_n (and q when present)."""

    rank: int
    has_q: bool
    images: tuple[GroupWord, ...]  # images[0] is the image of q when has_q

    def __post_init__(self):
        if len(self.images) != self.rank + 1:
            raise ValueError("images must have length rank + 1 (slot 0 holds q)")
        for k, img in enumerate(self.images):
            if img.rank != self.rank or img.has_q != self.has_q:
                raise ValueError(f"image of generator {k} has wrong rank")

    @classmethod
    def from_map(cls, rank: int, has_q: bool, images: Mapping[int, GroupWord]) -> FreeEndo:
        imgs = []
        for gen in range(rank + 1):
            if gen in images:
                imgs.append(images[gen])
            elif gen == Q and not has_q:
                imgs.append(identity(rank, has_q))
            else:
                imgs.append(generator(gen, rank, has_q))
        return cls(rank, has_q, tuple(imgs))

    @classmethod
    def identity(cls, rank: int, has_q: bool = False) -> FreeEndo:
        return cls.from_map(rank, has_q, {})

    def image(self, gen: int) -> GroupWord:
        if gen == Q and not self.has_q:
            raise MalformedWord("q is not a generator of this free group")
        return self.images[gen]

    def generators(self) -> list[int]:
        return ([Q] if self.has_q else []) + list(range(1, self.rank + 1))

    def __call__(self, w: GroupWord) -> GroupWord:
        return apply_endo(self, w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeEndo):
            return NotImplemented
        if (self.rank, self.has_q) != (other.rank, other.has_q):
            return False
        return all(self.image(g) == other.image(g) for g in self.generators())

    def __hash__(self) -> int:
        return hash((self.rank, self.has_q, tuple(self.image(g) for g in self.generators())))

    def is_identity(self) -> bool:
        return self == FreeEndo.identity(self.rank, self.has_q)


def apply_endo(f: FreeEndo, w: GroupWord) -> GroupWord:
    if (f.rank, f.has_q) != (w.rank, w.has_q):
        raise ValueError("rank mismatch between endomorphism and word")
    out: list[Letter] = []
    for gen, sign in w.letters:
        img = f.image(gen).letters
        out.extend(img if sign > 0 else [(g, -s) for g, s in reversed(img)])
    return GroupWord(tuple(out), w.rank, w.has_q)


def compose_endo(f: FreeEndo, g: FreeEndo) -> FreeEndo:
    """Return f o g, i.e. x -> f(g(x))."""
    if (f.rank, f.has_q) != (g.rank, g.has_q):
        raise ValueError("rank mismatch between endomorphisms")
    return FreeEndo(f.rank, f.has_q, tuple(apply_endo(f, img) for img in g.images))
