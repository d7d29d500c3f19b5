"""Static SVG line charts with no third-party renderer.

Output is deterministic for identical input: fixed geometry, a fixed palette,
and fixed coordinate formatting, so repeated runs are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyChartError

WIDTH = 760
HEIGHT = 480
MARGIN_LEFT = 70
MARGIN_RIGHT = 170
MARGIN_TOP = 50
MARGIN_BOTTOM = 60

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")

STYLES = ("line", "dashed")


@dataclass(frozen=True)
class ChartSeries:
    """One labelled line; points are kept sorted ascending by x."""

    label: str
    points: tuple
    style: str = "line"

    def __post_init__(self):
        if self.style not in STYLES:
            raise ValueError(f"style must be one of {STYLES}, got {self.style!r}")
        object.__setattr__(self, "points",
                           tuple(sorted((float(x), float(y)) for x, y in self.points)))


def _escape(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace('"', "&quot;"))


def _padded(lo: float, hi: float) -> tuple[float, float]:
    span = hi - lo
    pad = 0.05 * span if span > 0 else 1.0
    return lo - pad, hi + pad


def render_chart(series: list[ChartSeries],
                 x_label: str = "",
                 y_label: str = "",
                 title: str = "") -> str:
    """Render one polyline per series with axes, ticks and a legend."""
    if not series:
        raise EmptyChartError("no series to draw")
    for s in series:
        if len(s.points) < 2:
            raise EmptyChartError(f"series {s.label!r} has fewer than 2 points")

    x_lo, x_hi = _padded(min(p[0] for s in series for p in s.points),
                         max(p[0] for s in series for p in s.points))
    y_lo, y_hi = _padded(min(p[1] for s in series for p in s.points),
                         max(p[1] for s in series for p in s.points))

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    bottom = HEIGHT - MARGIN_BOTTOM

    def px(x: float) -> float:
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return bottom - (y - y_lo) / (y_hi - y_lo) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.2f}" y="28" text-anchor="middle" '
                   f'font-size="16" font-family="sans-serif">{_escape(title)}</text>')

    # gridlines and tick labels, 6 ticks per axis
    for i in range(6):
        ty = y_lo + i * (y_hi - y_lo) / 5
        y = py(ty)
        out.append(f'<line x1="{MARGIN_LEFT}" y1="{y:.2f}" '
                   f'x2="{MARGIN_LEFT + plot_w}" y2="{y:.2f}" '
                   f'stroke="#dddddd" stroke-width="1"/>')
        out.append(f'<text x="{MARGIN_LEFT - 8}" y="{y + 4:.2f}" text-anchor="end" '
                   f'font-size="11" font-family="sans-serif">{ty:.4g}</text>')
        tx = x_lo + i * (x_hi - x_lo) / 5
        x = px(tx)
        out.append(f'<line x1="{x:.2f}" y1="{bottom}" x2="{x:.2f}" y2="{bottom + 5}" '
                   f'stroke="#000000" stroke-width="1"/>')
        out.append(f'<text x="{x:.2f}" y="{bottom + 20}" text-anchor="middle" '
                   f'font-size="11" font-family="sans-serif">{tx:.4g}</text>')

    # axes
    out.append(f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
               f'y2="{bottom}" stroke="#000000" stroke-width="1.5"/>')
    out.append(f'<line x1="{MARGIN_LEFT}" y1="{bottom}" x2="{MARGIN_LEFT + plot_w}" '
               f'y2="{bottom}" stroke="#000000" stroke-width="1.5"/>')
    if x_label:
        out.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{HEIGHT - 16}" '
                   f'text-anchor="middle" font-size="13" '
                   f'font-family="sans-serif">{_escape(x_label)}</text>')
    if y_label:
        out.append(f'<text x="20" y="{MARGIN_TOP + plot_h / 2:.2f}" text-anchor="middle" '
                   f'font-size="13" font-family="sans-serif" '
                   f'transform="rotate(-90 20 {MARGIN_TOP + plot_h / 2:.2f})">'
                   f'{_escape(y_label)}</text>')

    # series polylines and legend
    legend_x = MARGIN_LEFT + plot_w + 16
    for idx, s in enumerate(series):
        color = PALETTE[idx % len(PALETTE)]
        dash = ' stroke-dasharray="7 4"' if s.style == "dashed" else ""
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in s.points)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2"{dash} '
                   f'points="{pts}"/>')
        ly = MARGIN_TOP + 14 + idx * 22
        out.append(f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 24}" y2="{ly}" '
                   f'stroke="{color}" stroke-width="2"{dash}/>')
        out.append(f'<text x="{legend_x + 30}" y="{ly + 4}" font-size="12" '
                   f'font-family="sans-serif">{_escape(s.label)}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
