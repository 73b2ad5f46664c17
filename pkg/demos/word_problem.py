"""Deciding equality of virtual braids by comparing their diagrams."""
from __future__ import annotations

from vbraid import act_word, coordinates, parse_word, words_equal

pairs = [
    ("t2 s1 t2", "t1 s2 t1", 3),
    ("s1 s2 s1", "s2 s1 s2", 3),
    ("t2 s1 s2", "s1 s2 t1", 3),
    ("s1 s3 S1", "s3", 4),
]

for u, v, n in pairs:
    a, b = parse_word(u, n), parse_word(v, n)
    print(f"{u:>12}  vs  {v:<12} equal: {words_equal(a, b)}")

# The two words of the third pair agree on braid coordinates (and so under the
# welded representation) but their diagrams differ.
for text in ("t2 s1 s2", "s1 s2 t1"):
    d = act_word(parse_word(text, 3))
    print(f"\n{text}\n  coordinates {coordinates(d)}\n  diagram     {d}")
