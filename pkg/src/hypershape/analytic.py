"""Closed-form SP and sphericity values for regular shapes.

Two SP variants are provided for every polytope family:

``SpVariant.PUBLISHED``
    the published closed forms, evaluated exactly as printed;
``SpVariant.GEOMETRIC``
    volume of the polytope whose circumradius equals the enclosing ball's
    radius, divided by that ball's volume.

They agree for the orthoplex in every dimension and for the simplex at
n = 3, and disagree elsewhere.  :func:`mc_sp_oracle` estimates the ratio
directly by sampling the unit ball, so it arbitrates between the two.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from hypershape.errors import HypershapeError, UnsupportedShape

SQRT_PI = math.sqrt(math.pi)

# name -> (faces, sides per face)
PLATONIC = {
    "tetrahedron": (4, 3),
    "cube": (6, 4),
    "octahedron": (8, 3),
    "dodecahedron": (12, 5),
    "icosahedron": (20, 3),
}

KINDS = ("ball", "cube", "simplex", "orthoplex", "platonic")


class SpVariant(enum.Enum):
    PUBLISHED = "published"
    GEOMETRIC = "geometric"


@dataclass(frozen=True)
class AnalyticShape:
    """A shape with a known SP: ball, cube, simplex, orthoplex or Platonic solid."""

    kind: str
    n: int = 3
    name: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedShape(f"unknown shape kind {self.kind!r}")
        if int(self.n) != self.n or self.n < 2:
            raise HypershapeError(f"dimension must be an integer >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        if self.kind == "platonic":
            if self.name not in PLATONIC:
                raise UnsupportedShape(
                    f"unknown Platonic solid {self.name!r}; expected one of {sorted(PLATONIC)}"
                )
            if self.n != 3:
                raise UnsupportedShape(f"Platonic solids exist only for n=3, got n={self.n}")

    @property
    def faces(self) -> int:
        return PLATONIC[self.name][0]

    @property
    def sides(self) -> int:
        return PLATONIC[self.name][1]

    @property
    def label(self) -> str:
        if self.kind == "platonic":
            return f"platonic:{self.name}"
        return f"{self.kind}:{self.n}"

    @classmethod
    def ball(cls, n):
        return cls("ball", n)

    @classmethod
    def cube(cls, n):
        return cls("cube", n)

    @classmethod
    def simplex(cls, n):
        return cls("simplex", n)

    @classmethod
    def orthoplex(cls, n):
        return cls("orthoplex", n)

    @classmethod
    def platonic(cls, name):
        return cls("platonic", 3, name)


def gamma_half(twice_x: int) -> float:
    """Gamma(twice_x / 2) for a positive integer ``twice_x``.

    Integer arguments give ``(x - 1)!``; half-integers give
    ``(2k)! / (4**k k!) * sqrt(pi)`` with ``x = k + 1/2``.  The rational part
    is exact, so the result carries only a couple of roundings.
    """
    if int(twice_x) != twice_x or twice_x < 1:
        raise HypershapeError(f"gamma_half needs a positive integer, got {twice_x}")
    twice_x = int(twice_x)
    if twice_x % 2 == 0:
        return float(math.factorial(twice_x // 2 - 1))
    k = (twice_x - 1) // 2
    ratio = Fraction(math.factorial(2 * k), 4**k * math.factorial(k))
    return float(ratio) * SQRT_PI


def ball_volume(n: int, r: float) -> float:
    """Volume of the n-ball of radius ``r``: pi^(n/2) r^n / Gamma(n/2 + 1)."""
    if n < 1 or r <= 0:
        raise HypershapeError(f"ball_volume needs n >= 1 and r > 0, got n={n}, r={r}")
    return math.pi ** (n / 2) * r**n / gamma_half(n + 2)


def ball_surface(n: int, r: float) -> float:
    """Surface measure of the n-ball of radius ``r``: 2 pi^(n/2) r^(n-1) / Gamma(n/2)."""
    if n < 2 or r <= 0:
        raise HypershapeError(f"ball_surface needs n >= 2 and r > 0, got n={n}, r={r}")
    return 2 * math.pi ** (n / 2) * r ** (n - 1) / gamma_half(n)


def sphericity(n: int, volume: float, radius: float, surface: float) -> float:
    return n * volume / (radius * surface)


def sphericity_ball(n: int, r: float = 1.0) -> float:
    """n V / (r S) for the n-ball; 1 up to rounding."""
    return sphericity(n, ball_volume(n, r), r, ball_surface(n, r))


# -- published closed forms ------------------------------------------------

def _published_platonic(f: int, s: int) -> float:
    return f * s * math.sin(math.radians(360 / s)) * gamma_half(5) / (6 * math.pi**1.5)


def _published_simplex(n: int) -> float:
    return (
        math.sqrt(n + 1) * gamma_half(n + 2) * 4**n
        / (math.factorial(n) * (12 * math.pi) ** (n / 2))
    )


def _published_cube(n: int) -> float:
    return gamma_half(n + 2) / (2 * math.pi) ** (n / 2)


def _published_orthoplex(n: int) -> float:
    return 2**n * gamma_half(n + 2) / (math.factorial(n) * math.pi ** (n / 2))


# -- circumradius-1 polytope volumes ---------------------------------------

def simplex_volume(n: int, edge: float) -> float:
    return math.sqrt(n + 1) / (math.factorial(n) * 2 ** (n / 2)) * edge**n


def _geometric_volume(shape: AnalyticShape) -> float:
    n = shape.n
    if shape.kind == "ball":
        return ball_volume(n, 1.0)
    if shape.kind == "cube":
        return (2 / math.sqrt(n)) ** n
    if shape.kind == "simplex":
        return simplex_volume(n, math.sqrt(2 * (n + 1) / n))
    if shape.kind == "orthoplex":
        return 2**n / math.factorial(n)
    s5 = math.sqrt(5)
    if shape.name == "tetrahedron":
        return 8 / (9 * math.sqrt(3))
    if shape.name == "cube":
        return 8 / (3 * math.sqrt(3))
    if shape.name == "octahedron":
        return 4 / 3
    if shape.name == "dodecahedron":
        a = 4 / (math.sqrt(3) * (1 + s5))
        return (15 + 7 * s5) / 4 * a**3
    a = 4 / math.sqrt(10 + 2 * s5)
    return 5 * (3 + s5) / 12 * a**3


def sp_closed_form(shape: AnalyticShape, variant: SpVariant = SpVariant.PUBLISHED) -> float:
    """SP of ``shape`` under the chosen variant."""
    variant = SpVariant(variant)
    if shape.kind == "ball":
        return 1.0
    if variant is SpVariant.GEOMETRIC:
        return _geometric_volume(shape) / ball_volume(shape.n, 1.0)
    if shape.kind == "cube":
        return _published_cube(shape.n)
    if shape.kind == "simplex":
        return _published_simplex(shape.n)
    if shape.kind == "orthoplex":
        return _published_orthoplex(shape.n)
    return _published_platonic(shape.faces, shape.sides)


# -- Monte-Carlo oracle ----------------------------------------------------

def simplex_vertices(n: int) -> np.ndarray:
    """Vertices of the regular n-simplex centred at 0 with circumradius 1."""
    centered = np.eye(n + 1) - 1.0 / (n + 1)
    # rows span the n-dim subspace orthogonal to (1, ..., 1)
    _, _, vt = np.linalg.svd(centered)
    pts = centered @ vt[:n].T
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def platonic_vertices(name: str) -> np.ndarray:
    """Vertices of a Platonic solid centred at 0 with circumradius 1."""
    phi = (1 + math.sqrt(5)) / 2
    signs = [-1.0, 1.0]
    if name == "tetrahedron":
        pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    elif name == "cube":
        pts = [(a, b, c) for a in signs for b in signs for c in signs]
    elif name == "octahedron":
        pts = [tuple(s * e for e in row) for row in np.eye(3).tolist() for s in signs]
    elif name in ("icosahedron", "dodecahedron"):
        if name == "icosahedron":
            base = [(0, a, b * phi) for a in signs for b in signs]
            pts = []
        else:
            base = [(0, a / phi, b * phi) for a in signs for b in signs]
            pts = [(a, b, c) for a in signs for b in signs for c in signs]
        for x, y, z in base:
            pts += [(x, y, z), (y, z, x), (z, x, y)]
    else:
        raise UnsupportedShape(f"unknown Platonic solid {name!r}")
    pts = np.asarray(pts, dtype=np.float64)
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def membership(shape: AnalyticShape):
    """Return ``inside(points) -> bool array`` for the circumradius-1 shape."""
    n = shape.n
    if shape.kind == "ball":
        return lambda p: np.einsum("ij,ij->i", p, p) <= 1.0
    if shape.kind == "cube":
        half = 1 / math.sqrt(n)
        return lambda p: np.abs(p).max(axis=1) <= half
    if shape.kind == "orthoplex":
        return lambda p: np.abs(p).sum(axis=1) <= 1.0
    if shape.kind == "simplex":
        verts = simplex_vertices(n)
        inv = np.linalg.inv((verts[1:] - verts[0]).T)

        def inside(p):
            lam = (p - verts[0]) @ inv.T
            return (lam >= 0).all(axis=1) & (lam.sum(axis=1) <= 1)

        return inside
    if shape.kind == "platonic":
        from scipy.spatial import ConvexHull

        eq = ConvexHull(platonic_vertices(shape.name)).equations
        normals, offsets = eq[:, :-1], eq[:, -1]
        return lambda p: (p @ normals.T + offsets <= 1e-12).all(axis=1)
    raise UnsupportedShape(f"no membership test for {shape.kind!r}")


@dataclass(frozen=True)
class OracleEstimate:
    estimate: float
    stderr: float
    samples: int

    def within(self, value: float, sigmas: float = 3.0) -> bool:
        return abs(self.estimate - value) <= sigmas * self.stderr


def mc_sp_oracle(shape: AnalyticShape, samples: int, seed: int, chunk: int = 1 << 18) -> OracleEstimate:
    """Fraction of uniform unit-ball samples that land inside ``shape``.

    The shape is scaled to circumradius 1, so the fraction estimates SP
    directly.  The standard error is the binomial one.
    """
    from hypershape.sim import ball_points, make_rng

    if samples < 1:
        raise HypershapeError("oracle needs at least one sample")
    inside = membership(shape)
    rng = make_rng(seed)
    hits = 0
    left = samples
    while left:
        k = min(chunk, left)
        hits += int(np.count_nonzero(inside(ball_points(shape.n, k, rng))))
        left -= k
    p = hits / samples
    return OracleEstimate(p, math.sqrt(p * (1 - p) / samples), samples)
