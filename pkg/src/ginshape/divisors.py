"""Exact divisor arithmetic on the blow-up of the plane at a near-pencil.

The surface is the blow-up of P^2 at l + 1 points where the first l lie on
a common line and the last one does not.  Its divisor class group is the
rank l + 2 lattice spanned by the pullback e0 of a general line and the
exceptional classes e1, ..., e_{l+1}, with intersection form of signature
(1, -1, ..., -1).

A class is stored as a pair (deg; mult_1, ..., mult_{l+1}) representing

    deg * e0 - mult_1 * e1 - ... - mult_{l+1} * e_{l+1},

so that plane curves of degree d with multiplicity at least m at every
point form the class (d; m, ..., m).  With this sign convention the
intersection number of two stored classes is

    deg * deg' - sum(mult_i * mult_i').

All coefficients are plain Python integers (arbitrary precision).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Configuration:
    """A near-pencil of points: l on a common line, one off it.

    Points are indexed 1..l for the collinear ones and l+1 for the
    remaining point.  l must be at least 3 so that the common line is
    itself a curve of negative self-intersection distinct from the
    lines joining pairs of points.
    """

    l: int

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 3:
            raise ValueError("l must be >= 3")

    @property
    def npoints(self) -> int:
        return self.l + 1


@dataclass(frozen=True)
class DivisorClass:
    """A class deg*e0 - sum(mult_i * e_i), as integers."""

    deg: int
    mult: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(int(a) for a in self.mult))

    def _check_same_lattice(self, other: "DivisorClass"):
        if len(self.mult) != len(other.mult):
            raise ValueError(
                "divisor classes live in different lattices "
                f"({len(self.mult)} vs {len(other.mult)} points)"
            )

    def dot(self, other: "DivisorClass") -> int:
        """Intersection number under the (1, -1, ..., -1) form."""
        self._check_same_lattice(other)
        return self.deg * other.deg - sum(a * b for a, b in zip(self.mult, other.mult))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same_lattice(other)
        return DivisorClass(self.deg + other.deg,
                            tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same_lattice(other)
        return DivisorClass(self.deg - other.deg,
                            tuple(a - b for a, b in zip(self.mult, other.mult)))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.deg, tuple(k * a for a in self.mult))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.deg, tuple(-a for a in self.mult))

    def __repr__(self) -> str:
        return f"({self.deg}; {', '.join(str(a) for a in self.mult)})"


@dataclass(frozen=True)
class NegCurveSet:
    """The finitely many classes of reduced irreducible curves with C^2 < 0.

    For the near-pencil these are: the proper transform of the common
    line (self-intersection 1 - l), the l proper transforms of the lines
    joining each collinear point to the off-line point (self-intersection
    -1), and the l + 1 exceptional curves (self-intersection -1).
    """

    line_transform: DivisorClass
    joining_lines: tuple[DivisorClass, ...]
    exceptional: tuple[DivisorClass, ...]

    @property
    def curves(self) -> tuple[DivisorClass, ...]:
        """All members, in the documented order: line transform first,
        then the joining lines, then the exceptional curves."""
        return (self.line_transform,) + self.joining_lines + self.exceptional

    def __len__(self) -> int:
        return 1 + len(self.joining_lines) + len(self.exceptional)

    def __iter__(self):
        return iter(self.curves)


def intersect(x: DivisorClass, y: DivisorClass) -> int:
    return x.dot(y)


def line_class(c: Configuration) -> DivisorClass:
    """The pullback e0 of a general line (degree 1, no multiplicities)."""
    return DivisorClass(1, (0,) * c.npoints)


def exceptional_class(c: Configuration, i: int) -> DivisorClass:
    """The class of the exceptional curve over point i (1-based)."""
    if not 1 <= i <= c.npoints:
        raise ValueError(f"point index {i} out of range 1..{c.npoints}")
    return DivisorClass(0, tuple(-1 if j == i - 1 else 0 for j in range(c.npoints)))


def canonical_class(c: Configuration) -> DivisorClass:
    """The canonical class: -3*e0 + e1 + ... + e_{l+1}."""
    return DivisorClass(-3, (-1,) * c.npoints)


def fatpoint_class(c: Configuration, d: int, m: int) -> DivisorClass:
    """Class of degree-d curves with multiplicity at least m at every point."""
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    if d < 0:
        raise ValueError("degree d must be >= 0")
    return DivisorClass(d, (m,) * c.npoints)


def neg_curves(c: Configuration) -> NegCurveSet:
    """Enumerate all negative curves on the blow-up (2l + 2 classes)."""
    l, n = c.l, c.npoints
    line = DivisorClass(1, tuple(1 if j < l else 0 for j in range(n)))
    joining = tuple(
        DivisorClass(1, tuple(1 if j == i or j == l else 0 for j in range(n)))
        for i in range(l)
    )
    exceptional = tuple(exceptional_class(c, i) for i in range(1, n + 1))
    return NegCurveSet(line, joining, exceptional)
