"""Virtual braids acting on virtual curve diagrams: a solution to the word problem
in the virtual braid group, plus its free group representations."""

from __future__ import annotations

from .action import act_perm, act_sigma, act_word, braid_diagram, coordinates, top_braid
from .braid import BGen, BraidWord, Perm, parse_word, perm_to_word, underlying_perm
from .freegroup import FreeEndo, GroupWord
from .reduce import intact, normalize, undraw, words_equal, is_trivial
from .reps import RepKind, is_kernel_element, psi_from_vcd, word_endo
from .render import to_ascii, to_svg
from .vcd import Vcd, canonicalize, complexity, simplify, trivial_diagram, validate

__version__ = "0.1.0"

__all__ = [
    "BGen", "BraidWord", "FreeEndo", "GroupWord", "Perm", "RepKind", "Vcd",
    "act_perm", "act_sigma", "act_word", "braid_diagram", "canonicalize", "complexity",
    "coordinates", "intact", "is_kernel_element", "is_trivial", "normalize", "parse_word",
    "perm_to_word", "psi_from_vcd", "simplify", "to_ascii", "to_svg", "top_braid",
    "trivial_diagram", "underlying_perm", "undraw", "validate", "word_endo", "words_equal",
]
