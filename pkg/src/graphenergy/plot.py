"""Minimal static SVG scatter rendering for experiment CSV files.

One point per trial (energy/n against trial index) plus a horizontal line
per bound at its mean-over-trials value.  No styling ambitions; the output
is a plain, self-contained SVG document.
"""

from __future__ import annotations

import math

__all__ = ["PlotError", "scatter_svg", "render_csv_file"]

_WIDTH, _HEIGHT = 720, 480
_MARGIN = 60
_LINE_SERIES = ("tpg", "aj", "mcclelland", "global", "tp", "ad")
_COLORS = {
    "tpg": "#d62728",
    "aj": "#1f77b4",
    "mcclelland": "#2ca02c",
    "global": "#9467bd",
    "tp": "#ff7f0e",
    "ad": "#8c564b",
}


class PlotError(ValueError):
    """CSV schema mismatch or empty input."""


def _parse_csv(text: str) -> tuple[list[str], list[dict[str, str]]]:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise PlotError("empty CSV")
    header = lines[0].split(",")
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(header):
            raise PlotError(f"row has {len(cells)} cells, header has {len(header)}")
        rows.append(dict(zip(header, cells)))
    if not rows:
        raise PlotError("CSV has a header but no data rows")
    return header, rows


def scatter_svg(csv_text: str) -> str:
    """Render experiment CSV text to an SVG scatter plot."""
    header, rows = _parse_csv(csv_text)
    for required in ("trial", "n", "energy_per_n"):
        if required not in header:
            raise PlotError(f"missing column {required!r}")

    xs = [int(r["trial"]) for r in rows]
    ys = [float(r["energy_per_n"]) for r in rows]
    n = int(rows[0]["n"])

    hlines: list[tuple[str, float]] = []
    for name in _LINE_SERIES:
        if name not in header:
            continue
        vals = [float(r[name]) / n for r in rows if r[name] != ""]
        if vals:
            hlines.append((name, math.fsum(vals) / len(vals)))

    ymin = min([min(ys)] + [y for _, y in hlines])
    ymax = max([max(ys)] + [y for _, y in hlines])
    pad = 0.05 * (ymax - ymin or 1.0)
    ymin, ymax = ymin - pad, ymax + pad
    xmin, xmax = min(xs), max(xs)
    xspan = (xmax - xmin) or 1

    def px(x: float) -> float:
        return _MARGIN + (x - xmin) / xspan * (_WIDTH - 2 * _MARGIN)

    def py(y: float) -> float:
        return _HEIGHT - _MARGIN - (y - ymin) / (ymax - ymin) * (_HEIGHT - 2 * _MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<line x1="{_MARGIN}" y1="{_HEIGHT - _MARGIN}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<text x="{_WIDTH // 2}" y="{_HEIGHT - 16}" text-anchor="middle" '
        f'font-size="13">trial</text>',
        f'<text x="18" y="{_HEIGHT // 2}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 18 {_HEIGHT // 2})">energy / n</text>',
    ]
    for name, y in hlines:
        color = _COLORS.get(name, "#777777")
        parts.append(
            f'<line x1="{_MARGIN}" y1="{py(y):.2f}" x2="{_WIDTH - _MARGIN}" '
            f'y2="{py(y):.2f}" stroke="{color}" stroke-dasharray="6 3"/>'
        )
        parts.append(
            f'<text x="{_WIDTH - _MARGIN + 4}" y="{py(y) + 4:.2f}" font-size="11" '
            f'fill="{color}">{name}</text>'
        )
    for x, y in zip(xs, ys):
        parts.append(f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="3" fill="#333333"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_csv_file(csv_path, out_path) -> None:
    with open(csv_path) as fh:
        text = fh.read()
    svg = scatter_svg(text)
    with open(out_path, "w") as fh:
        fh.write(svg)
