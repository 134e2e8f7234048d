"""Generic initial staircases, Newton polytopes, and the limiting shape.

The reverse-lexicographic generic initial ideal of a saturated ideal of
points in the plane is generated in the first two variables, so it is a
staircase

    x^alpha, x^(alpha-1) y^(lam_{alpha-1}), ..., x y^(lam_1), y^(lam_0)

with lam_0 > lam_1 > ... > lam_{alpha-1} >= 1.  When the ideal is
componentwise linear the staircase is forced by the generator degrees
alone: the k-th smallest degree d_k belongs to the generator with
x-exponent alpha - k, so lam_{alpha-k} = d_k - (alpha - k).

The Newton polytope of such a staircase is described by the boundary
polyline of the convex region spanned by the generator exponents; its
vertices run from (alpha, 0) up to (0, lam_0).  Scaling a polytope by
1/m and letting m grow along multiples of l(l-1) gives the limiting
shape, which these staircases attain exactly at every such m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .generators import GeneratorTable


@dataclass(frozen=True)
class GinStaircase:
    """Exponent data of a two-variable staircase monomial ideal.

    ``alpha`` is the x-exponent of the pure power x^alpha; ``lam`` maps
    each x-exponent i in 0..alpha-1 to the y-exponent of the generator
    x^i y^(lam[i]); ``m`` records which symbolic power produced it.
    """

    alpha: int
    lam: dict[int, int]
    m: int

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("staircase needs alpha >= 1")
        if set(self.lam) != set(range(self.alpha)):
            raise ValueError("lam must cover x-exponents 0..alpha-1 exactly")
        chain = [self.lam[i] for i in range(self.alpha)]
        if any(a <= b for a, b in zip(chain, chain[1:])) or chain[-1] < 1:
            raise ValueError(f"y-exponents must strictly decrease to >= 1, got {chain}")

    def generators(self) -> list[tuple[int, int]]:
        """(x, y) exponent pairs, by decreasing x: (alpha, 0) first."""
        return [(self.alpha, 0)] + [(i, self.lam[i]) for i in range(self.alpha - 1, -1, -1)]

    def degrees(self) -> list[int]:
        """Total degrees of the generators, ascending."""
        return sorted(x + y for x, y in self.generators())

    @property
    def ngens(self) -> int:
        return self.alpha + 1


@dataclass(frozen=True)
class Polytope2D:
    """Boundary polyline of a staircase region, from (x_max, 0) to (0, y_max).

    Vertices are exact rationals, strictly decreasing in x and strictly
    increasing in y; the two axis segments closing the region are
    implicit.
    """

    vertices: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        verts = tuple((Fraction(x), Fraction(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise ValueError("polytope needs at least two boundary vertices")
        for (x1, y1), (x2, y2) in zip(verts, verts[1:]):
            if not (x1 > x2 and y1 < y2):
                raise ValueError("vertices must strictly decrease in x and increase in y")
        if any(x < 0 or y < 0 for x, y in verts):
            raise ValueError("vertices must have nonnegative coordinates")


def build_staircase(t: GeneratorTable) -> GinStaircase:
    """Assemble the gin staircase forced by a certified generator table."""
    if not t.cwl_certified:
        raise ValueError(
            "cannot determine gin without componentwise linearity "
            f"(l={t.l}, m={t.m}: alpha={t.alpha}, generators={t.total})"
        )
    degrees = t.degrees()
    if degrees[0] != t.alpha or len(degrees) != t.alpha + 1:
        raise AssertionError("certified table out of balance; generator count bug")
    lam = {}
    for k, d in enumerate(degrees):
        i = t.alpha - k
        if k == 0:
            continue  # the pure power x^alpha
        lam[i] = d - i
    staircase = GinStaircase(alpha=t.alpha, lam=lam, m=t.m)  # validates the chain
    return staircase


def newton_polytope(s: GinStaircase) -> Polytope2D:
    """Vertices of the convex region spanned by the staircase exponents.

    Computes the greatest convex minorant of the exponent points; interior
    and collinear points are dropped, so only true corners remain.
    """
    points = sorted((i, s.lam[i]) for i in range(s.alpha))
    points.append((s.alpha, 0))
    hull: list[tuple[int, int]] = []
    for px, py in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep only strictly convex corners
            if (x2 - x1) * (py - y1) - (px - x1) * (y2 - y1) <= 0:
                hull.pop()
            else:
                break
        hull.append((px, py))
    return Polytope2D(tuple((Fraction(x), Fraction(y)) for x, y in reversed(hull)))


def scaled_polytope(p: Polytope2D, m: int) -> Polytope2D:
    """Divide every vertex by m, exactly."""
    if m < 1:
        raise ValueError("scale factor m must be >= 1")
    return Polytope2D(tuple((x / m, y / m) for x, y in p.vertices))


def limiting_shape(l: int) -> Polytope2D:
    """The limit of the 1/m-scaled Newton polytopes for the near-pencil.

    Exact vertices: (2 - 1/l, 0), (1 - 1/(l-1), l/(l-1)), (0, l).
    """
    if l < 3:
        raise ValueError("l must be >= 3")
    return Polytope2D((
        (2 - Fraction(1, l), Fraction(0)),
        (1 - Fraction(1, l - 1), Fraction(l, l - 1)),
        (Fraction(0), Fraction(l)),
    ))


def polytope_area(p: Polytope2D) -> Fraction:
    """Exact area of the region enclosed by the axes and the polyline."""
    corners = [(Fraction(0), Fraction(0))] + list(p.vertices)
    twice = Fraction(0)
    for (x1, y1), (x2, y2) in zip(corners, corners[1:] + corners[:1]):
        twice += x1 * y2 - x2 * y1
    return abs(twice) / 2
