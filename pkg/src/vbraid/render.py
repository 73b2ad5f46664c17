"""
SVG and ASCII pictures of diagrams.

Both renderers canonicalize first, so equal classes give byte-identical output.
The geometry matches the drawing used by ``reps.psi_from_vcd``: upper points at
evenly spaced x, under arcs as lower semicircles, base arcs as straight segments.
"""

from __future__ import annotations

from .vcd import BASE, OVER, Vcd, arc_kind, canonicalize, excursion_notation


def _over_depths(d: Vcd) -> dict[tuple[int, int], int]:
    """Nesting depth of each over arc span (innermost arcs get 1)."""
    spans = sorted({d.span(a) for a in d.over_arcs()}, key=lambda sp: sp[1] - sp[0])
    depth: dict[tuple[int, int], int] = {}
    for lo, hi in spans:
        inside = [h for (a, b), h in depth.items() if lo <= a and b <= hi]
        depth[(lo, hi)] = 1 + max(inside, default=0)
    return depth


def _f(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def to_svg(d: Vcd, spacing: float = 40.0, level: float = 18.0, margin: float = 30.0) -> str:
    d = canonicalize(d)
    m = len(d.upper)
    depth = _over_depths(d)
    top = margin + level * (max(depth.values(), default=0) + 1)
    xs = [margin + spacing * k for k in range(m)]
    width = 2 * margin + spacing * max(m - 1, 1)
    under = [d.span(a) for a in d.under_arcs()]
    deepest = max((spacing * (hi - lo) / 2 for lo, hi in under), default=0.0)
    base_y = top + deepest + 3 * level
    height = base_y + margin
    nb = len(d.base)
    bx = {b: margin + k * (width - 2 * margin) / max(nb - 1, 1) for k, b in enumerate(d.base)}
    if nb == 1:
        bx = {d.base[0]: width / 2}

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">',
        f'<line x1="{_f(margin / 2)}" y1="{_f(top)}" x2="{_f(width - margin / 2)}" y2="{_f(top)}" '
        'stroke="gray" stroke-dasharray="4 4"/>',
        f'<line x1="{_f(margin / 2)}" y1="{_f(base_y)}" x2="{_f(width - margin / 2)}" y2="{_f(base_y)}" '
        'stroke="black"/>',
    ]
    pos = d.upper_pos
    for a in d.arcs():
        kind, _ = arc_kind(d, a)
        p, q = d.endpoints(a)
        if kind == BASE:
            out.append(f'<line x1="{_f(bx[p])}" y1="{_f(base_y)}" x2="{_f(xs[pos[q]])}" y2="{_f(top)}" '
                       'stroke="black" fill="none"/>')
            continue
        x1, x2 = xs[pos[p]], xs[pos[q]]
        rx = abs(x2 - x1) / 2
        if kind == OVER:
            ry = level * depth[d.span(a)]
            sweep = 1 if x1 < x2 else 0
        else:
            ry = rx
            sweep = 0 if x1 < x2 else 1
        out.append(f'<path d="M {_f(x1)} {_f(top)} A {_f(rx)} {_f(ry)} 0 0 {sweep} {_f(x2)} {_f(top)}" '
                   'stroke="black" fill="none"/>')
    terminals = set(d.terminals)
    for k, p in enumerate(d.upper):
        r = 5 if p in terminals else 2
        out.append(f'<circle cx="{_f(xs[k])}" cy="{_f(top)}" r="{r}" fill="black"/>')
    for b in d.base:
        out.append(f'<circle cx="{_f(bx[b])}" cy="{_f(base_y)}" r="5" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _pack_rows(spans: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Greedy row assignment so that spans sharing a row do not touch."""
    rows: list[list[tuple[int, int]]] = []
    for sp in sorted(spans, key=lambda s: (s[1] - s[0], s)):
        for row in rows:
            if all(sp[1] < a or b < sp[0] for a, b in row):
                row.append(sp)
                break
        else:
            rows.append([sp])
    return rows


def to_ascii(d: Vcd) -> str:
    """Monospace sketch: over arcs above the dashed line, under arcs and base
    connectors below it, then the excursion notation."""
    d = canonicalize(d)
    m = len(d.upper)
    col = [3 * k + 2 for k in range(m)]
    width = 3 * m + 2
    depth = _over_depths(d)
    h_over = max(depth.values(), default=0)
    under_rows = _pack_rows([d.span(a) for a in d.under_arcs()])
    h_under = len(under_rows)
    height = h_over + 1 + h_under + 2
    grid = [[" "] * width for _ in range(height)]
    line_row = h_over
    base_row = height - 1

    def put(r: int, c: int, ch: str) -> None:
        cur = grid[r][c]
        if cur == " " or ch == "+":
            grid[r][c] = ch
        elif {cur, ch} == {"-", "|"}:
            grid[r][c] = "+"

    for (lo, hi), h in sorted(depth.items()):
        r = line_row - h
        for c in range(col[lo], col[hi] + 1):
            put(r, c, "-")
        for c in (col[lo], col[hi]):
            put(r, c, "+")
            for rr in range(r + 1, line_row):
                put(rr, c, "|")
    for k, row in enumerate(under_rows):
        r = line_row + 1 + k
        for lo, hi in row:
            for c in range(col[lo], col[hi] + 1):
                put(r, c, "-")
            for c in (col[lo], col[hi]):
                put(r, c, "+")
                for rr in range(line_row + 1, r):
                    put(rr, c, "|")
    for c in range(width):
        grid[line_row][c] = "-" if c % 2 == 0 else " "
        grid[base_row][c] = "="
    terminals = set(d.terminals)
    slot = {t: s for s, t in enumerate(d.terminals, 1)}
    for k, p in enumerate(d.upper):
        grid[line_row][col[k]] = str(slot[p] % 10) if p in terminals else "o"
    for a in d.arcs():
        if arc_kind(d, a)[0] != BASE:
            continue
        b, p = d.endpoints(a)
        c = col[d.upper_pos[p]]
        for rr in range(line_row + 1, base_row):
            put(rr, c, "|")
        grid[base_row][c] = str((d.base_pos[b] + 1) % 10)
    body = ["".join(row).rstrip() for row in grid]
    return "\n".join(body + [excursion_notation(d)]) + "\n"
