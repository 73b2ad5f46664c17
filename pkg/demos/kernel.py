"""A nontrivial virtual braid that the q-extended representation sends to the identity."""
from __future__ import annotations

from vbraid import is_trivial, parse_word, word_endo
from vbraid.freegroup import pretty_word
from vbraid.reps import RepKind, is_kernel_element

for k in (1, 2, 3):
    w = parse_word(f"(t3 s2 t1 S2)^{k}", 4)
    f = word_endo(RepKind.BM, w)
    print(f"power {k}: identity image {is_kernel_element(RepKind.BM, w)}, trivial braid {is_trivial(w)}")
    for g in f.generators()[1:]:
        print(f"    x{g} -> {pretty_word(f.image(g))}")
