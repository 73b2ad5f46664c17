"""Reduce a diagram step by step and read a braid word back off it."""
from __future__ import annotations

import random

from vbraid import act_word, normalize, undraw, words_equal
from vbraid.braid import random_word
from vbraid.vcd import complexity

rng = random.Random(2024)
w = random_word(4, 10, rng)
d = act_word(w)
print(f"word      {w}")
print(f"diagram   {d.num_points()} points, complexity {complexity(d)}")

trace = normalize(d)
for step in trace.steps:
    label = str(step.gen) if step.kind == "sigma" else str(step.perm)
    print(f"  {step.kind:<5} {label:<16} {step.before} -> {step.after}")
print(f"minimal   {trace.minimal}")

back = undraw(d)
print(f"undrawn   {back}")
print(f"same braid: {words_equal(back, w)}")
