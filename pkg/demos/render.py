"""Draw a few diagrams as ASCII and write one SVG to the working directory."""
from __future__ import annotations

from pathlib import Path

from vbraid import act_word, parse_word
from vbraid.render import to_ascii, to_svg

for text, n in [("s1", 2), ("S1 t2", 3), ("t1 t2 s2 t2 s1 t1", 3)]:
    print(f"{text} (n={n})")
    print(to_ascii(act_word(parse_word(text, n))))

out = Path("stuck.svg")
out.write_text(to_svg(act_word(parse_word("t1 t2 s2 t2 s1 t1", 3))))
print(f"wrote {out}")
