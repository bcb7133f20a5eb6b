"""Multiplicity as mirror-symmetric tuples of nonintersecting lattice paths.

Each point beta of the canonical monomial of (v, w) spans a vertical and
a horizontal line on the grid; where these meet the boundary of the
region row > column gives the endpoints of a lattice path.  A step moves
to the next admissible row below or the next column of v to the right.
Systems of one path per point, pairwise vertex-disjoint and compatible
with the anti-diagonal mirror, are counted; their number equals the
multiplicity computed by the `hilbert` module.
"""

from __future__ import annotations

from .grid import Point, VGrid
from .monw import monw_points
from .poset import IndexSet

Path = tuple[Point, ...]


def endpoints(grid: VGrid, beta: Point) -> tuple[Point, Point]:
    """Boundary points of the vertical and horizontal lines through beta."""
    r, c = beta
    start_row = min(x for x in grid.rows if x > c)
    finish_col = max(x for x in grid.cols if x < r)
    return (start_row, c), (r, finish_col)


def _next_row(grid: VGrid, r: int):
    bigger = [x for x in grid.rows if x > r]
    return min(bigger) if bigger else None


def _next_col(grid: VGrid, c: int):
    bigger = [x for x in grid.cols if x > c]
    return min(bigger) if bigger else None


def enumerate_paths(grid: VGrid, start: Point, finish: Point) -> list[Path]:
    """All monotone staircase paths from start to finish inside row > column."""
    out: list[Path] = []

    def walk(p: Point, acc: tuple):
        if p == finish:
            out.append(acc + (p,))
            return
        r, c = p
        nr, nc = _next_row(grid, r), _next_col(grid, c)
        if nr is not None and nr <= finish[0] and nr > c:
            walk((nr, c), acc + (p,))
        if nc is not None and nc <= finish[1] and r > nc:
            walk((r, nc), acc + (p,))

    if start[0] > start[1] and finish[0] > finish[1]:
        walk(start, ())
    return out


def path_mirror(grid: VGrid, path: Path) -> Path:
    """Mirror each point and reverse, giving again a start-to-finish path."""
    return tuple(grid.mirror(p) for p in reversed(path))


def expected_path_length(grid: VGrid, start: Point, finish: Point) -> int:
    rows = sum(1 for x in grid.rows if start[0] <= x <= finish[0])
    cols = sum(1 for x in grid.cols if start[1] <= x <= finish[1])
    return rows + cols - 1


def _orbits(grid: VGrid, points: tuple[Point, ...]) -> list[tuple[Point, ...]]:
    """Mirror orbits of the monomial, ordered by start column for determinism."""
    ordered = sorted(points, key=lambda b: (endpoints(grid, b)[0][1], b))
    seen = set()
    orbits = []
    for b in ordered:
        if b in seen:
            continue
        mb = grid.mirror(b)
        seen.add(b)
        if mb == b:
            orbits.append((b,))
        else:
            seen.add(mb)
            orbits.append((b, mb))
    return orbits


def enumerate_path_systems(v: IndexSet, w: IndexSet) -> list[dict[Point, Path]]:
    """All mirror-symmetric vertex-disjoint systems, one path per point."""
    if not (v.is_isotropic() and w.is_isotropic()):
        raise ValueError("path systems need isotropic v and w")
    grid = VGrid(v)
    points = monw_points(v, w)
    orbits = _orbits(grid, points)
    candidates = []
    for orbit in orbits:
        b = orbit[0]
        cands = enumerate_paths(grid, *endpoints(grid, b))
        if len(orbit) == 1:
            cands = [p for p in cands if p == path_mirror(grid, p)]
        candidates.append(cands)

    systems: list[dict[Point, Path]] = []

    def place(i: int, used: frozenset, chosen: dict):
        if i == len(orbits):
            systems.append(dict(chosen))
            return
        orbit = orbits[i]
        for path in candidates[i]:
            pts = set(path)
            if len(orbit) == 2:
                partner = path_mirror(grid, path)
                ppts = set(partner)
                if pts & ppts or (pts | ppts) & used:
                    continue
                chosen[orbit[0]], chosen[orbit[1]] = path, partner
                place(i + 1, used | pts | ppts, chosen)
                del chosen[orbit[0]], chosen[orbit[1]]
            else:
                if pts & used:
                    continue
                chosen[orbit[0]] = path
                place(i + 1, used | pts, chosen)
                del chosen[orbit[0]]

    place(0, frozenset(), {})
    return systems


def count_path_systems(v: IndexSet, w: IndexSet) -> int:
    return len(enumerate_path_systems(v, w))


# ---------------------------------------------------------------------------
# rendering


_CELL = 24
_PAD = 36
_PALETTE = ("#c0392b", "#2471a3", "#1e8449", "#b7950b", "#7d3c98", "#b03a2e", "#148f77")


def _layout(grid: VGrid):
    xcol = {c: i for i, c in enumerate(grid.cols)}
    yrow = {r: i for i, r in enumerate(grid.rows)}
    return xcol, yrow


def render_svg(v: IndexSet, w: IndexSet, systems=None) -> str:
    """Deterministic SVG: columns of v left to right, rows top to bottom,
    monomial points as solid dots, anti-diagonal shaded, one polyline per
    path.  With systems=None draws the grid and points only; a list of
    systems is laid out as side-by-side panels."""
    grid = VGrid(v)
    points = monw_points(v, w)
    if systems is None:
        panels = [None]
    elif systems and isinstance(systems, dict):
        panels = [systems]
    else:
        panels = list(systems) or [None]
    xcol, yrow = _layout(grid)
    pw = len(grid.cols) * _CELL + _PAD
    ph = len(grid.rows) * _CELL + _PAD
    width, height = pw * len(panels), ph
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]

    def cx(panel, c):
        return panel * pw + _PAD + xcol[c] * _CELL + _CELL // 2

    def cy(r):
        return _PAD + yrow[r] * _CELL + _CELL // 2

    for i, system in enumerate(panels):
        for r, c in sorted(grid.diag):
            out.append(
                f'<rect x="{cx(i, c) - _CELL // 2}" y="{cy(r) - _CELL // 2}" '
                f'width="{_CELL}" height="{_CELL}" fill="#eeeeee"/>'
            )
        x0, x1 = i * pw + _PAD, i * pw + _PAD + len(grid.cols) * _CELL
        y0, y1 = _PAD, _PAD + len(grid.rows) * _CELL
        for j in range(len(grid.cols) + 1):
            x = i * pw + _PAD + j * _CELL
            out.append(
                f'<line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" stroke="#cccccc" stroke-width="1"/>'
            )
        for j in range(len(grid.rows) + 1):
            y = _PAD + j * _CELL
            out.append(
                f'<line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}" stroke="#cccccc" stroke-width="1"/>'
            )
        for j, c in enumerate(grid.cols):
            out.append(
                f'<text x="{cx(i, c)}" y="{y0 - 6}" font-size="10" '
                f'text-anchor="middle" font-family="monospace">{c}</text>'
            )
        for r in grid.rows:
            out.append(
                f'<text x="{x0 - 6}" y="{cy(r) + 3}" font-size="10" '
                f'text-anchor="end" font-family="monospace">{r}</text>'
            )
        if system:
            keys = sorted(system)
            for k, beta in enumerate(keys):
                color = _PALETTE[k % len(_PALETTE)]
                pts = " ".join(f"{cx(i, c)},{cy(r)}" for r, c in system[beta])
                out.append(
                    f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>'
                )
        for r, c in sorted(points):
            out.append(f'<circle cx="{cx(i, c)}" cy="{cy(r)}" r="4" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(v: IndexSet, w: IndexSet, systems, format: str) -> str:
    """Dispatch on format ("svg" or "ascii"); unknown formats are rejected."""
    if format == "svg":
        return render_svg(v, w, systems)
    if format == "ascii":
        if systems is None:
            return render_ascii(v, w, None)
        if isinstance(systems, dict):
            systems = [systems]
        blocks = [render_ascii(v, w, s) for s in systems]
        return "\n".join(blocks) if blocks else render_ascii(v, w, None)
    raise ValueError(f"unknown render format {format!r}: expected svg or ascii")


def render_ascii(v: IndexSet, w: IndexSet, system=None) -> str:
    """Text rendering of one system (or the bare grid with system=None).

    Cell precedence: path index digit, then '*' for a monomial point,
    then '\\' on the anti-diagonal, '.' elsewhere.
    """
    grid = VGrid(v)
    points = set(monw_points(v, w))
    cells = {}
    for r, c in grid.diag:
        cells[(r, c)] = "\\"
    for r, c in points:
        cells[(r, c)] = "*"
    if system:
        for k, beta in enumerate(sorted(system)):
            mark = str(k + 1) if k < 9 else chr(ord("a") + k - 9)
            for r, c in system[beta]:
                cells[(r, c)] = mark
    header = "    " + " ".join(f"{c:>2}" for c in grid.cols)
    lines = [header]
    for r in grid.rows:
        row = " ".join(f"{cells.get((r, c), '.'):>2}" for c in grid.cols)
        lines.append(f"{r:>3} {row}")
    return "\n".join(lines) + "\n"
