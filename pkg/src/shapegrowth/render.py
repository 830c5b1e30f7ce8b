"""SVG frames for a constructor trace: one file per time-step, nodes drawn as
unit squares, nodes generated in that step filled gray, older nodes black."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .shape import Point, Shape

CELL = 20
MARGIN = 1
OLD_FILL = "#000000"
NEW_FILL = "#9a9a9a"


def render_svg(s: Shape, generated: Iterable[Point] = (), frame: tuple[int, int, int, int] | None = None) -> str:
    """SVG document for ``s``; ``frame`` fixes the drawn bounds (min_x, min_y, max_x, max_y)."""
    new = set(generated)
    min_x, min_y, max_x, max_y = frame if frame is not None else s.bounds
    cols = max_x - min_x + 1 + 2 * MARGIN
    rows = max_y - min_y + 1 + 2 * MARGIN
    width, height = cols * CELL, rows * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for i in range(cols + 1):
        out.append(f'<line x1="{i * CELL}" y1="0" x2="{i * CELL}" y2="{height}"/>')
    for j in range(rows + 1):
        out.append(f'<line x1="0" y1="{j * CELL}" x2="{width}" y2="{j * CELL}"/>')
    out.append("</g>")
    out.append('<g stroke="#ffffff" stroke-width="1">')
    for x, y in s.sorted_points():
        # SVG y grows downward, grid y grows north
        px = (x - min_x + MARGIN) * CELL
        py = (max_y - y + MARGIN) * CELL
        fill = NEW_FILL if (x, y) in new else OLD_FILL
        out.append(f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{fill}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_frames(trace: list[Shape], generated: list[set[Point]], out_dir: str | Path, prefix: str = "frame") -> list[Path]:
    """Write ``prefix_NNN.svg`` for every trace entry; frame 0 has no generated nodes."""
    if len(generated) != len(trace) - 1:
        raise ValueError("need one generated set per step")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    digits = max(3, len(str(len(trace) - 1)))
    paths = []
    for t, s in enumerate(trace):
        gen = generated[t - 1] if t else set()
        path = out_dir / f"{prefix}_{t:0{digits}d}.svg"
        path.write_text(render_svg(s, gen))
        paths.append(path)
    return paths
