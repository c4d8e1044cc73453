"""Deterministic TikZ export of circle configurations."""

from __future__ import annotations

from circlegeom.disks import Configuration


def export_tikz(conf: Configuration, width_cm: float = 8.0) -> str:
    """TikZ picture with one draw command and one label node per circle.

    Coordinates are shifted and scaled so the drawing's bounding box (over
    the disks, radii included) is width_cm wide, keeping the aspect ratio.
    Output is a pure function of the input: identical input gives
    byte-identical text.
    """
    if width_cm <= 0:
        raise ValueError("width must be positive")
    xs_lo = min(c.x - c.r for c in conf.circles)
    xs_hi = max(c.x + c.r for c in conf.circles)
    ys_lo = min(c.y - c.r for c in conf.circles)
    extent = xs_hi - xs_lo
    scale = width_cm / extent if extent > 0 else 1.0
    lines = ["\\begin{tikzpicture}"]
    for i, c in enumerate(conf.circles):
        x = (c.x - xs_lo) * scale
        y = (c.y - ys_lo) * scale
        r = c.r * scale
        lines.append(f"  \\draw ({x:.4f},{y:.4f}) circle ({r:.4f});")
        lines.append(f"  \\node at ({x:.4f},{y:.4f}) {{${conf.ground.label(i)}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
