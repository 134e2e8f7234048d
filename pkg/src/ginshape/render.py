"""Figure output: deterministic SVG for the limiting shape, matplotlib
renderings for the report path.

The SVG writer is plain string assembly so that repeated runs with the
same inputs are byte-identical (fixed viewBox computed from l, no
timestamps or generated ids).  The matplotlib helpers render PNG/PDF
figures next to the delimited output; they are not required to be
byte-stable.
"""

from __future__ import annotations

from fractions import Fraction

from .divisors import Configuration
from .generators import generator_table
from .staircase import (
    Polytope2D,
    build_staircase,
    limiting_shape,
    newton_polytope,
    polytope_area,
    scaled_polytope,
)

_SCALE = 150  # svg pixels per lattice unit
_MARGIN = 80


def _scaled_overlay(l: int, m: int) -> Polytope2D:
    table = generator_table(Configuration(l), m)
    if not table.cwl_certified:
        raise ValueError(f"m={m} is not certified; no staircase to overlay")
    return scaled_polytope(newton_polytope(build_staircase(table)), m)


def shape_svg(l: int, overlay_m: int | None = None) -> str:
    """SVG 1.1 document for the limiting shape (optionally a scaled overlay)."""
    limit = limiting_shape(l)
    area = polytope_area(limit)
    width = 2 * _MARGIN + 2 * _SCALE
    height = 2 * _MARGIN + l * _SCALE

    def px(x) -> float:
        return float(_MARGIN + Fraction(x) * _SCALE)

    def py(y) -> float:
        return float(_MARGIN + (l - Fraction(y)) * _SCALE)

    def sx(x) -> str:
        return f"{px(x):.2f}"

    def sy(y) -> str:
        return f"{py(y):.2f}"

    def poly_points(vertices, closed_at_origin: bool) -> str:
        pts = ([(Fraction(0), Fraction(0))] if closed_at_origin else []) + list(vertices)
        return " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {width} {height}" width="{width}" height="{height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(2)}" y2="{sy(0)}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(l)}" '
        'stroke="black" stroke-width="1"/>',
        f'<polygon points="{poly_points(limit.vertices, True)}" '
        'fill="#c9ddf2" stroke="#27577d" stroke-width="2"/>',
    ]
    for x, y in limit.vertices:
        parts.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="4" fill="#27577d"/>')
        parts.append(
            f'<text x="{px(x) + 8:.2f}" y="{py(y) - 8:.2f}" '
            f'font-family="monospace" font-size="16">({x}, {y})</text>'
        )
    parts.append(
        f'<text x="{sx(Fraction(1, 4))}" y="{sy(Fraction(1, 4))}" '
        f'font-family="monospace" font-size="18">area = {area}</text>'
    )
    parts.append(
        f'<text x="{_MARGIN}" y="{_MARGIN // 2}" font-family="monospace" '
        f'font-size="18">limiting shape, l = {l}</text>'
    )
    if overlay_m is not None:
        scaled = _scaled_overlay(l, overlay_m)
        coincides = scaled.vertices == limit.vertices
        parts.append(
            f'<polygon points="{poly_points(scaled.vertices, True)}" fill="none" '
            'stroke="#b03a2e" stroke-width="2" stroke-dasharray="8 5"/>'
        )
        parts.append(
            f'<text x="{_MARGIN}" y="{height - _MARGIN // 2}" font-family="monospace" '
            f'font-size="16">overlay: m = {overlay_m} scaled polytope, '
            f'coincides = {str(coincides).lower()}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_shape_svg(path: str, l: int, overlay_m: int | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(shape_svg(l, overlay_m))


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _draw_polytope(ax, p: Polytope2D, label: str, color: str, fill: bool):
    xs = [0.0] + [float(x) for x, _ in p.vertices] + [0.0]
    ys = [0.0] + [float(y) for _, y in p.vertices] + [0.0]
    if fill:
        ax.fill(xs, ys, color=color, alpha=0.25)
    ax.plot(xs, ys, color=color, lw=1.8, label=label)


def save_shape_figure(path: str, l: int, overlay_m: int | None = None) -> None:
    """Render the limiting shape (and an optional scaled overlay) to a file."""
    plt = _pyplot()
    limit = limiting_shape(l)
    fig, ax = plt.subplots(figsize=(5.2, 5.2))
    _draw_polytope(ax, limit, f"limiting shape (area {polytope_area(limit)})", "#27577d", True)
    if overlay_m is not None:
        scaled = _scaled_overlay(l, overlay_m)
        _draw_polytope(ax, scaled, f"m = {overlay_m} scaled polytope", "#b03a2e", False)
    for x, y in limit.vertices:
        ax.annotate(f"({x}, {y})", (float(x), float(y)),
                    textcoords="offset points", xytext=(6, 6), fontsize=8)
    ax.set_xlabel("x exponent / m")
    ax.set_ylabel("y exponent / m")
    ax.set_title(f"l = {l}")
    ax.legend(loc="upper right", fontsize=8)
    ax.set_xlim(left=0)
    ax.set_ylim(bottom=0)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_analysis_figure(path: str, l: int, m: int) -> None:
    """Render the report figure for one (l, m): generator degrees, and, when
    the table is certified, the staircase with its Newton polytope plus the
    scaled-vs-limiting comparison."""
    plt = _pyplot()
    table = generator_table(Configuration(l), m)
    if table.cwl_certified:
        fig, (ax_counts, ax_stair, ax_limit) = plt.subplots(1, 3, figsize=(13.5, 4.4))
    else:
        fig, ax_counts = plt.subplots(figsize=(5.2, 4.4))

    degrees = sorted(table.counts)
    ax_counts.bar(degrees, [table.counts[d] for d in degrees], color="#4878a8")
    ax_counts.set_xlabel("degree")
    ax_counts.set_ylabel("minimal generators")
    ax_counts.set_title(f"l = {l}, m = {m}: alpha = {table.alpha}, "
                        f"total = {table.total}")

    if table.cwl_certified:
        stair = build_staircase(table)
        newton = newton_polytope(stair)
        pts = stair.generators()
        ax_stair.scatter([x for x, _ in pts], [y for _, y in pts],
                         s=18, color="#333333", zorder=3, label="generators")
        hull_x = [float(x) for x, _ in newton.vertices]
        hull_y = [float(y) for _, y in newton.vertices]
        ax_stair.plot(hull_x, hull_y, color="#b03a2e", lw=1.8, label="polytope boundary")
        ax_stair.set_title("gin staircase")
        ax_stair.set_xlabel("x exponent")
        ax_stair.set_ylabel("y exponent")
        ax_stair.legend(fontsize=8)

        limit = limiting_shape(l)
        scaled = scaled_polytope(newton, m)
        _draw_polytope(ax_limit, limit, "limiting shape", "#27577d", True)
        _draw_polytope(ax_limit, scaled, "scaled polytope", "#b03a2e", False)
        match = "exact match" if scaled.vertices == limit.vertices else "differs"
        ax_limit.set_title(f"scaled vs limiting ({match})")
        ax_limit.legend(fontsize=8)
        ax_limit.set_xlim(left=0)
        ax_limit.set_ylim(bottom=0)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
