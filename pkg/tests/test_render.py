from __future__ import annotations

import re

from hypothesis import given, strategies as st

from strategies import diagrams
from vbraid.action import act_word
from vbraid.braid import parse_word
from vbraid.checks import stuck_example
from vbraid.render import to_ascii, to_svg
from vbraid.vcd import Vcd, canonicalize, excursion_notation, trivial_diagram


def paths(svg):
    """Split the arc paths into (over, under) by sweep direction."""
    over, under = [], []
    for x1, sweep, x2 in re.findall(r'<path d="M (\S+) \S+ A \S+ \S+ 0 0 (\d) (\S+) \S+"', svg):
        left_to_right = float(x1) < float(x2)
        (over if (sweep == "1") == left_to_right else under).append((x1, x2))
    return over, under


def test_trivial_svg():
    svg = to_svg(trivial_diagram(3))
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    # two horizontal lines plus one base arc per curve
    assert svg.count("<line") == 5
    assert "<path" not in svg
    assert svg.count('r="5"') == 6


def test_stuck_example_svg():
    svg = to_svg(stuck_example())
    over, under = paths(svg)
    assert len(over) == 2 and len(under) == 2
    assert svg.count("<circle") == 7 + 3


def test_single_crossing_svg():
    over, under = paths(to_svg(act_word(parse_word("s1", 2))))
    assert len(over) == 1 and under == []


def test_ascii_trivial():
    text = to_ascii(trivial_diagram(2))
    assert text.splitlines()[-1] == "curve(b=1): .P1 | curve(b=2): .P2"
    assert "+" not in text


def test_ascii_footer_and_brackets():
    d = act_word(parse_word("s1", 2))
    lines = to_ascii(d).splitlines()
    assert lines[0].strip().startswith("+") and lines[-1] == excursion_notation(d)


def test_renderers_ignore_point_names():
    ex = stuck_example()
    assert to_svg(ex) == to_svg(canonicalize(ex))
    assert to_ascii(ex) == to_ascii(canonicalize(ex))


@given(diagrams(max_n=4, max_len=8), st.randoms(use_true_random=False))
def test_renderers_are_deterministic(d, rng):
    ids = d.upper + d.base
    ren = dict(zip(ids, rng.sample(range(10_000), len(ids))))
    e = Vcd(tuple(ren[p] for p in d.upper), tuple(ren[p] for p in d.base),
            tuple(tuple(ren[p] for p in c) for c in d.curves))
    assert to_svg(d) == to_svg(e)
    assert to_ascii(d) == to_ascii(e)
