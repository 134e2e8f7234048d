"""Hilbert functions and minimal-generator counts of uniform fat-point ideals.

For the ideal I of the near-pencil configuration, the degree-d piece of
the m-th symbolic power I^(m) has dimension h0 of the class (d; m,..,m)
on the blow-up.  The number of degree-(d+1) minimal generators is the
corank of the multiplication map R_1 (x) I_d -> I_{d+1}, computed here
divisor-theoretically:

* if (d; m,..,m) is not effective the corank is all of h0 in degree d+1;
* otherwise it equals h0(F_{d+1}) - h0(H_d + e0), where H_d is the nef
  part of F_d.  (The points lie on a conic, namely the common line plus
  any line through the last point, which forces the remaining corank
  term to vanish.)

``closed_form_table`` rebuilds the same table directly from the degree
bookkeeping valid when l(l-1) divides m, with no divisor computation, as
an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import Configuration, fatpoint_class, line_class
from .nef import h0, reduce_to_nef, scan_ceiling


@dataclass(frozen=True)
class GeneratorTable:
    """Per-degree minimal generator counts of I^(m).

    ``counts`` maps degree -> number of minimal generators (zero entries
    omitted), ``alpha`` is the least degree of a nonzero element, and
    ``cwl_certified`` records the componentwise-linearity criterion
    alpha == total - 1.  The criterion is one-directional: True certifies
    componentwise linearity; False only means "not certified here".
    """

    l: int
    m: int
    alpha: int
    counts: dict[int, int]
    total: int
    cwl_certified: bool

    def degrees(self) -> list[int]:
        """All generator degrees, ascending, with multiplicity."""
        return sorted(d for d, v in self.counts.items() for _ in range(v))


def hilbert_function(c: Configuration, m: int, d: int) -> int:
    """dim of the degree-d graded piece of I^(m) (the ideal, not the quotient)."""
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    if d < 0:
        raise ValueError("degree d must be >= 0")
    return h0(c, fatpoint_class(c, d, m))


def next_degree_gen_count(c: Configuration, m: int, d: int) -> int:
    """Number of minimal generators of I^(m) in degree d + 1."""
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    if d < 0:
        raise ValueError("degree d must be >= 0")
    reduction = reduce_to_nef(c, fatpoint_class(c, d, m))
    above = h0(c, fatpoint_class(c, d + 1, m))
    if not reduction.effective:
        return above
    v = above - h0(c, reduction.final + line_class(c))
    if v < 0:
        raise AssertionError(
            f"negative generator count at l={c.l} m={m} d={d}; divisor arithmetic bug"
        )
    return v


def generator_table(c: Configuration, m: int) -> GeneratorTable:
    """Scan degrees 0..l*m and assemble the full generator table."""
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    ceiling = scan_ceiling(c, m)
    counts: dict[int, int] = {}
    alpha = None
    for d in range(ceiling + 1):
        if alpha is None and hilbert_function(c, m, d) > 0:
            alpha = d
        v = next_degree_gen_count(c, m, d)
        if v:
            counts[d + 1] = v
    assert alpha is not None, "fat-point class must be effective by degree l*m"
    assert min(counts) == alpha, "first generator degree must be alpha"
    total = sum(counts.values())
    return GeneratorTable(
        l=c.l,
        m=m,
        alpha=alpha,
        counts=counts,
        total=total,
        cwl_certified=(alpha == total - 1),
    )


def closed_form_table(l: int, m: int) -> GeneratorTable:
    """Generator table straight from the degree bookkeeping (l(l-1) | m).

    The generators fall into four families:

    * one generator of degree 2m - m/l (this is alpha);
    * l generators of degree 2m - m/l + 1;
    * within 2m - m/l + 1 < d <= 2m: l generators of degree
      2m - (p + w(l-1)) + 1 for w = 0, p = 2..l-2 and for
      w = 1..rho-1, p in {0, 2, .., l-2}; and l+1 generators of degree
      2m - w(l-1) for w = 0..rho-1, where rho = m / (l(l-1));
    * one generator of degree j*m + w(l-1) + l - 1 for each j = 2..l-1
      and w = 0..rho*l - 1 (the degrees above 2m, topping out at l*m).
    """
    if l < 3:
        raise ValueError("l must be >= 3")
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    if m % (l * (l - 1)) != 0:
        raise ValueError(f"closed form requires l(l-1) = {l * (l - 1)} to divide m = {m}")
    rho = m // (l * (l - 1))
    counts: dict[int, int] = {}

    def add(degree: int, k: int):
        counts[degree] = counts.get(degree, 0) + k

    alpha = 2 * m - m // l
    add(alpha, 1)
    add(alpha + 1, l)
    for w in range(rho):
        residues = range(2, l - 1) if w == 0 else [0, *range(2, l - 1)]
        for p in residues:
            add(2 * m - (p + w * (l - 1)) + 1, l)
    for w in range(rho):
        add(2 * m - w * (l - 1), l + 1)
    for j in range(2, l):
        for w in range(rho * l):
            add(j * m + w * (l - 1) + l - 1, 1)

    total = sum(counts.values())
    return GeneratorTable(
        l=l,
        m=m,
        alpha=alpha,
        counts=counts,
        total=total,
        cwl_certified=(alpha == total - 1),
    )
