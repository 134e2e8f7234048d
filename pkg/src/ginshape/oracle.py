"""Independent ground truth from exact linear algebra on explicit points.

Everything here works with honest coordinates over the rationals and
never touches the divisor-theoretic machinery, so agreement between the
two routes is a real check and not a tautology.

* ``oracle_hilbert`` builds the vanishing-condition matrix (all partial
  derivatives of total order < m at each point, in the affine chart of a
  nonvanishing coordinate) and returns #monomials - rank.
* ``oracle_generator_counts`` measures the corank of multiplication by
  the linear forms, degree by degree, using exact kernel bases.
* ``oracle_gin`` applies a random linear change of coordinates, row
  reduces each graded piece against reverse-lexicographically sorted
  monomial columns, and reads the initial ideal off the pivot columns.

Characteristic zero throughout; no floating point, no modular tricks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .ratmat import RationalMatrix
from .staircase import GinStaircase

COORDINATE_BOUND = 50  # random coordinate changes draw entries from [-B, B]
RETRY_BUDGET = 3


@dataclass(frozen=True)
class PointSet:
    """l + 1 projective points: the first l on the line z = 0, the last off it."""

    points: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 4:
            raise ValueError("need at least 4 points (l >= 3)")
        if any(p == (0, 0, 0) for p in pts):
            raise ValueError("(0,0,0) is not a projective point")
        l = len(pts) - 1
        for i, p in enumerate(pts):
            on_line = p[2] == 0
            if i < l and not on_line:
                raise ValueError(f"point {i + 1} must lie on the line z = 0")
            if i == l and on_line:
                raise ValueError("the last point must lie off the line z = 0")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if _cross(pts[i], pts[j]) == (0, 0, 0):
                    raise ValueError(f"points {i + 1} and {j + 1} coincide")

    @property
    def l(self) -> int:
        return len(self.points) - 1


def _cross(p, q):
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


@dataclass(frozen=True)
class MonomialOrderContext:
    """Degree-d monomials in x, y, z, largest first under revlex (x > y > z).

    Among monomials of equal degree, the one with the smaller z-exponent
    is larger, ties broken by smaller y-exponent; so x^d comes first and
    z^d last.
    """

    degree: int
    monomials: tuple[tuple[int, int, int], ...]

    @classmethod
    def for_degree(cls, d: int) -> "MonomialOrderContext":
        if d < 0:
            raise ValueError("degree must be >= 0")
        mons = []
        for ez in range(d + 1):
            for ey in range(d - ez + 1):
                mons.append((d - ez - ey, ey, ez))
        return cls(degree=d, monomials=tuple(mons))

    def index(self, monomial: tuple[int, int, int]) -> int:
        ex, ey, ez = monomial
        # position of (ey, ez) in the enumeration above
        return ez * (2 * self.degree + 3 - ez) // 2 + ey

    def __len__(self) -> int:
        return len(self.monomials)


def default_points(l: int) -> PointSet:
    """Small integer coordinates: [1 : i : 0] for i = 1..l, then [0 : 0 : 1]."""
    if l < 3:
        raise ValueError("l must be >= 3")
    return PointSet(tuple((1, i, 0) for i in range(1, l + 1)) + ((0, 0, 1),))


def _falling(n: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= n - j
    return out


def _condition_rows(points, m: int, d: int) -> tuple[list[list[int]], MonomialOrderContext]:
    """Vanishing-to-order-m conditions at each point, as integer rows.

    For a point with nonvanishing coordinate j, the row for the partial
    derivative of orders (a, b) in the two remaining coordinates u, v is
    the functional

        x^e  |->  falling(e_u, a) * falling(e_v, b)
                  * p_u^(e_u - a) * p_v^(e_v - b) * p_j^(e_j + a + b)

    i.e. the affine-chart derivative cleared of denominators by the
    per-row factor p_j^(d - a - b), which changes no rank or kernel.
    Rows run over a + b <= m - 1, columns over the revlex-sorted
    monomials.
    """
    ctx = MonomialOrderContext.for_degree(d)
    rows = []
    for p in points:
        j = next(i for i in (2, 1, 0) if p[i] != 0)
        u, v = (i for i in range(3) if i != j)
        pu, pv, pj = p[u], p[v], p[j]
        for a in range(m):
            for b in range(m - a):
                row = []
                for e in ctx.monomials:
                    eu, ev, ej = e[u], e[v], e[j]
                    if eu < a or ev < b:
                        row.append(0)
                    else:
                        row.append(
                            _falling(eu, a) * _falling(ev, b)
                            * pu ** (eu - a) * pv ** (ev - b) * pj ** (ej + a + b)
                        )
                rows.append(row)
    return rows, ctx


def condition_matrix(ps: PointSet, m: int, d: int) -> RationalMatrix:
    """The fat-point condition matrix whose kernel is the degree-d piece of I^(m)."""
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    if d < 0:
        raise ValueError("degree d must be >= 0")
    rows, ctx = _condition_rows(ps.points, m, d)
    return RationalMatrix(rows, cols=len(ctx))


def oracle_hilbert(ps: PointSet, m: int, d: int) -> int:
    """dim of the degree-d piece of I^(m), via the rank of the condition matrix."""
    matrix = condition_matrix(ps, m, d)
    return matrix.cols - matrix.rank()


def oracle_generator_counts(ps: PointSet, m: int, dmax: int) -> dict[int, int]:
    """Minimal-generator counts per degree up to dmax (zero entries omitted).

    In each degree d the count is dim I_d minus the rank of the spanning
    set {x*f, y*f, z*f : f in a basis of I_{d-1}}.
    """
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    counts: dict[int, int] = {}
    prev_basis: list[list[int]] = []
    prev_ctx = None
    for d in range(dmax + 1):
        rows, ctx = _condition_rows(ps.points, m, d)
        kernel = RationalMatrix(rows, cols=len(ctx)).kernel_basis()
        if prev_basis:
            span = []
            for vec in prev_basis:
                for var in range(3):
                    lifted = [0] * len(ctx)
                    for col, coeff in enumerate(vec):
                        if coeff:
                            e = list(prev_ctx.monomials[col])
                            e[var] += 1
                            lifted[ctx.index(tuple(e))] = coeff
                    span.append(lifted)
            image_rank = RationalMatrix(span, cols=len(ctx)).rank()
        else:
            image_rank = 0
        v = len(kernel) - image_rank
        if v < 0:
            raise AssertionError(f"multiplication image exceeds ideal at d={d}")
        if v and d >= 1:
            counts[d] = v
        prev_basis, prev_ctx = kernel, ctx
    return counts


def _random_coordinate_change(rng: random.Random, bound: int):
    """A random integer 3x3 matrix with nonzero determinant."""
    for _ in range(1000):
        g = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        det = (
            g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
        )
        if det != 0:
            return g
    raise RuntimeError("could not draw an invertible coordinate change")


def _adjugate(g):
    def minor(r, c):
        rs = [i for i in range(3) if i != r]
        cs = [i for i in range(3) if i != c]
        return g[rs[0]][cs[0]] * g[rs[1]][cs[1]] - g[rs[0]][cs[1]] * g[rs[1]][cs[0]]

    return [[(-1) ** (r + c) * minor(c, r) for c in range(3)] for r in range(3)]


def _transform_points(points, g):
    """Substituting x -> g.x in polynomials moves the points by adj(g)."""
    adj = _adjugate(g)
    moved = []
    for p in points:
        q = tuple(sum(adj[r][c] * p[c] for c in range(3)) for r in range(3))
        content = gcd(gcd(abs(q[0]), abs(q[1])), abs(q[2]))
        moved.append(tuple(x // content for x in q))
    return moved


def oracle_gin(ps: PointSet, m: int, dmax: int, seed: int,
               bound: int = COORDINATE_BOUND, retries: int = RETRY_BUDGET) -> GinStaircase:
    """Reverse-lexicographic generic initial staircase of I^(m), degree by degree.

    A seeded random coordinate change is applied (one draw per call, so
    results are reproducible from the seed), each graded piece of the
    transformed ideal is row reduced against revlex-descending monomial
    columns, and pivot columns give the initial monomials.  Minimal
    generators are the initial monomials not reachable from lower degree
    by multiplying with a variable.  All generators must involve only x
    and y; a z generator means the coordinate change was not generic, in
    which case a fresh change is drawn, up to the retry budget.

    Pass dmax >= the largest expected generator degree (l*m + 1 is safe).
    """
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    rng = random.Random(seed)
    failures: list[str] = []
    for _ in range(retries + 1):
        g = _random_coordinate_change(rng, bound)
        moved = _transform_points(ps.points, g)
        try:
            gens = _initial_ideal_generators(moved, m, dmax)
            return _assemble_staircase(gens, m)
        except _NonGenericError as exc:
            failures.append(str(exc))
    raise RuntimeError(
        "coordinate change not generic or ideal not saturated correctly: "
        + "; ".join(failures)
    )


class _NonGenericError(Exception):
    pass


def _initial_ideal_generators(points, m: int, dmax: int) -> list[tuple[int, int, int]]:
    gens: list[tuple[int, int, int]] = []
    prev_leads: set[tuple[int, int, int]] = set()
    for d in range(dmax + 1):
        rows, ctx = _condition_rows(points, m, d)
        kernel = RationalMatrix(rows, cols=len(ctx)).kernel_basis()
        if kernel:
            _, pivots = RationalMatrix(kernel, cols=len(ctx)).echelon()
            leads = {ctx.monomials[c] for c in pivots}
        else:
            leads = set()
        grown = set()
        for mono in prev_leads:
            for var in range(3):
                e = list(mono)
                e[var] += 1
                grown.add(tuple(e))
        if not grown <= leads:
            raise _NonGenericError(f"initial ideal shrank at degree {d}")
        new = leads - grown
        for mono in sorted(new):
            if mono[2] != 0:
                raise _NonGenericError(f"generator {mono} involves z at degree {d}")
            gens.append(mono)
        prev_leads = leads
    return gens


def _assemble_staircase(gens, m: int) -> GinStaircase:
    pure = [ex for ex, ey, _ in gens if ey == 0]
    if len(pure) != 1:
        raise ValueError(f"expected exactly one pure x power, found {len(pure)}; raise dmax?")
    alpha = pure[0]
    lam = {ex: ey for ex, ey, _ in gens if ey > 0}
    if 0 not in lam:
        raise ValueError("no pure y power found below dmax; raise dmax")
    return GinStaircase(alpha=alpha, lam=lam, m=m)
