"""Minimal self-contained SVG charts: line + quantile band, interval bars, boxplots."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

PALETTE = ("#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666")

WIDTH, HEIGHT = 640, 400
MARGIN = dict(left=70, right=150, top=40, bottom=50)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=10 * mag)
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 12))
        t += step
    return ticks


class Canvas:
    """Plot area with linear x/y scales and an SVG body being built up."""

    def __init__(self, title, xlabel, ylabel, xlim, ylim):
        self.parts: list[str] = []
        self.x0, self.x1 = xlim
        lo, hi = ylim
        if hi <= lo:
            pad = abs(lo) * 0.1 or 1.0
            lo, hi = lo - pad, hi + pad
        pad = (hi - lo) * 0.05
        self.y0, self.y1 = lo - pad, hi + pad
        self.left = MARGIN["left"]
        self.right = WIDTH - MARGIN["right"]
        self.top = MARGIN["top"]
        self.bottom = HEIGHT - MARGIN["bottom"]
        self._axes(title, xlabel, ylabel)
        self.legend_rows = 0

    def sx(self, x: float) -> float:
        span = (self.x1 - self.x0) or 1.0
        return self.left + (x - self.x0) / span * (self.right - self.left)

    def sy(self, y: float) -> float:
        return self.bottom - (y - self.y0) / (self.y1 - self.y0) * (self.bottom - self.top)

    def text(self, x, y, s, anchor="middle", size=12, extra=""):
        self.parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{size}" text-anchor="{anchor}" '
            f'font-family="sans-serif"{extra}>{escape(str(s))}</text>'
        )

    def line(self, xa, ya, xb, yb, color="#000", width=1.0, dash=None):
        d = f' stroke-dasharray="{dash}"' if dash else ""
        self.parts.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" '
            f'stroke="{color}" stroke-width="{width}"{d}/>'
        )

    def polyline(self, xs, ys, color, width=1.5, dash=None):
        pts = " ".join(f"{_fmt(self.sx(x))},{_fmt(self.sy(y))}" for x, y in zip(xs, ys))
        d = f' stroke-dasharray="{dash}"' if dash else ""
        self.parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="{width}"{d}/>'
        )

    def circle(self, x, y, color, r=3.0):
        self.parts.append(f'<circle cx="{_fmt(self.sx(x))}" cy="{_fmt(self.sy(y))}" r="{r}" fill="{color}"/>')

    def rect(self, xa, ya, xb, yb, color, fill="none"):
        x, y = min(xa, xb), min(ya, yb)
        self.parts.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(abs(xb - xa))}" '
            f'height="{_fmt(abs(yb - ya))}" stroke="{color}" fill="{fill}"/>'
        )

    def legend(self, label, color, dash=None):
        y = self.top + 10 + 18 * self.legend_rows
        x = self.right + 15
        self.line(x, y, x + 25, y, color, 2.0, dash)
        self.text(x + 32, y + 4, label, anchor="start", size=11)
        self.legend_rows += 1

    def _axes(self, title, xlabel, ylabel):
        self.line(self.left, self.bottom, self.right, self.bottom)
        self.line(self.left, self.top, self.left, self.bottom)
        for t in _nice_ticks(self.x0, self.x1, max(2, min(12, int(self.x1 - self.x0) or 2))):
            x = self.sx(t)
            self.line(x, self.bottom, x, self.bottom + 5)
            self.text(x, self.bottom + 18, f"{t:g}", size=10)
        for t in _nice_ticks(self.y0, self.y1):
            y = self.sy(t)
            self.line(self.left - 5, y, self.left, y)
            self.text(self.left - 8, y + 3, f"{t:.3g}", anchor="end", size=10)
        self.text((self.left + self.right) / 2, 22, title, size=14)
        self.text((self.left + self.right) / 2, HEIGHT - 12, xlabel)
        cy = (self.top + self.bottom) / 2
        self.text(18, cy, ylabel, extra=f' transform="rotate(-90 18 {_fmt(cy)})"')

    def render(self) -> str:
        body = "\n".join(self.parts)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">\n<rect width="100%" height="100%" fill="white"/>\n'
            f"{body}\n</svg>\n"
        )


def line_band_chart(series, reference, title, xlabel, ylabel) -> str:
    """One solid mean line per series with dotted lower/upper quantile lines.

    ``series`` is a list of ``(label, xs, mean, lo, hi)``; ``reference`` is
    the theoretical value drawn as a black solid line.
    """
    xs_all = [x for s in series for x in s[1]] or [0.0, 1.0]
    ys_all = [y for s in series for col in s[2:] for y in col] + [reference]
    c = Canvas(title, xlabel, ylabel, (min(xs_all), max(xs_all)), (min(ys_all), max(ys_all)))
    ry = c.sy(reference)
    c.line(c.left, ry, c.right, ry, "#000", 2.0)
    c.legend("theoretical", "#000")
    for i, (label, xs, mean, lo, hi) in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        c.polyline(xs, lo, color, 1.0, "3,3")
        c.polyline(xs, hi, color, 1.0, "3,3")
        c.polyline(xs, mean, color, 2.0)
        c.legend(label, color)
    return c.render()


def interval_chart(groups, title, xlabel, ylabel) -> str:
    """Centre point with a vertical interval bar for every x of every group.

    ``groups`` is a list of ``(label, xs, centre, lo, hi)``; groups are
    dodged horizontally so bars at the same x stay readable.
    """
    xs_all = [x for g in groups for x in g[1]] or [0.0, 1.0]
    ys_all = [y for g in groups for col in g[2:] for y in col] or [0.0, 1.0]
    c = Canvas(title, xlabel, ylabel, (min(xs_all) - 0.5, max(xs_all) + 0.5), (min(ys_all), max(ys_all)))
    width = 0.6
    for i, (label, xs, centre, lo, hi) in enumerate(groups):
        color = PALETTE[i % len(PALETTE)]
        off = (i - (len(groups) - 1) / 2) * width / max(len(groups), 1)
        for x, m, a, b in zip(xs, centre, lo, hi):
            px = c.sx(x + off)
            c.line(px, c.sy(a), px, c.sy(b), color, 1.5)
            c.line(px - 3, c.sy(a), px + 3, c.sy(a), color, 1.5)
            c.line(px - 3, c.sy(b), px + 3, c.sy(b), color, 1.5)
            c.circle(x + off, m, color)
        c.legend(label, color)
    return c.render()


def box_chart(groups, title, xlabel, ylabel) -> str:
    """Five-number boxplots; ``groups`` is ``(label, xs, [(min, q1, med, q3, max), ...])``."""
    xs_all = [x for g in groups for x in g[1]] or [0.0, 1.0]
    ys_all = [v for g in groups for box in g[2] for v in box] or [0.0, 1.0]
    c = Canvas(title, xlabel, ylabel, (min(xs_all) - 0.5, max(xs_all) + 0.5), (min(ys_all), max(ys_all)))
    slot = 0.8 / max(len(groups), 1)
    half = slot * 0.35 * (c.right - c.left) / max(c.x1 - c.x0, 1e-9)
    for i, (label, xs, boxes) in enumerate(groups):
        color = PALETTE[i % len(PALETTE)]
        off = (i - (len(groups) - 1) / 2) * slot
        for x, (lo, q1, med, q3, hi) in zip(xs, boxes):
            px = c.sx(x + off)
            c.line(px, c.sy(lo), px, c.sy(q1), color)
            c.line(px, c.sy(q3), px, c.sy(hi), color)
            c.line(px - half / 2, c.sy(lo), px + half / 2, c.sy(lo), color)
            c.line(px - half / 2, c.sy(hi), px + half / 2, c.sy(hi), color)
            c.rect(px - half, c.sy(q1), px + half, c.sy(q3), color, "white")
            c.line(px - half, c.sy(med), px + half, c.sy(med), color, 2.0)
        c.legend(label, color)
    return c.render()
