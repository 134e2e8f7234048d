"""Reduction of divisor classes to numerically effective ones.

A class is numerically effective (nef) when it pairs nonnegatively with
every curve class on the surface; since the effective cone here is
generated by the finitely many negative curves together with nef classes,
it is enough to test against the negative-curve list and the line class.

``reduce_to_nef`` strips fixed components off a class one negative curve
at a time: whenever the class pairs negatively with a negative curve C,
the curve is a fixed component of the linear system and can be subtracted
without changing the number of global sections.  The loop ends either at
a nef class, or at a class of negative degree, which pairs negatively
with the (nef) line class and therefore cannot be effective.

For a nef class the section count follows from Riemann-Roch with
vanishing higher cohomology:

    h0 = (H.H - H.K)/2 + 1

where K is the canonical class.  For uniform fat-point classes (d; m,..,m)
with m a multiple of l(l-1) the whole reduction also has a closed form,
implemented in ``closed_form_reduction`` as an independent fast path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import (
    Configuration,
    DivisorClass,
    canonical_class,
    fatpoint_class,
    line_class,
    neg_curves,
)


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of a nef reduction.

    ``final`` is the nef class when ``effective`` is true; otherwise it is
    the witness class of negative degree where the reduction stopped.
    ``trace`` lists the (curve, copies) subtractions performed, in order,
    with consecutive subtractions of the same curve coalesced; the input
    class always equals ``final`` plus the trace sum.
    """

    effective: bool
    final: DivisorClass
    trace: tuple[tuple[DivisorClass, int], ...]

    @property
    def nef_part(self) -> DivisorClass | None:
        return self.final if self.effective else None

    def reconstruct(self) -> DivisorClass:
        """Recombine ``final`` with the trace (equals the original input)."""
        total = self.final
        for curve, copies in self.trace:
            total = total + copies * curve
        return total


def is_nef(c: Configuration, f: DivisorClass) -> bool:
    """True when f pairs nonnegatively with every negative curve and the line."""
    if f.dot(line_class(c)) < 0:
        return False
    return all(f.dot(curve) >= 0 for curve in neg_curves(c))


class _Tracer:
    """Collects subtractions, merging consecutive entries for one curve."""

    def __init__(self):
        self.entries: list[tuple[DivisorClass, int]] = []

    def record(self, curve: DivisorClass, copies: int):
        if self.entries and self.entries[-1][0] == curve:
            prev_curve, prev_copies = self.entries[-1]
            self.entries[-1] = (prev_curve, prev_copies + copies)
        else:
            self.entries.append((curve, copies))

    def done(self) -> tuple[tuple[DivisorClass, int], ...]:
        return tuple(self.entries)


def reduce_to_nef(c: Configuration, f: DivisorClass) -> ReductionResult:
    """Strip fixed negative curves off f, or certify non-effectivity.

    Subtractions happen in a fixed order (line transform, then the
    joining lines in point order, then exceptional curves), so the trace
    is deterministic; the nef class itself does not depend on the order.
    Curves of self-intersection -1 are removed in one batch of exactly
    the copies needed to clear the pairing.  The line transform (square
    1 - l) is removed copy by copy, stopping as soon as the degree
    coordinate drops below zero; the batch arithmetic below is exactly
    equivalent to that loop.
    """
    if len(f.mult) != c.npoints:
        raise ValueError("class does not match the configuration")
    l = c.l
    curves = neg_curves(c)
    tracer = _Tracer()

    deg = f.deg
    mult = list(f.mult)

    # clear negative multiplicities up front: an exceptional curve with
    # negative pairing is a fixed component as many times over
    for i, a in enumerate(mult):
        if a < 0:
            tracer.record(curves.exceptional[i], -a)
            mult[i] = 0

    # each pass either returns, lowers deg by >= 1 (line transform or a
    # joining line), or zeroes one negative multiplicity; a multiplicity
    # can only go negative again after another deg-lowering pass, so the
    # pass count is bounded by (deg + 2) * (npoints + 2)
    cap = (max(f.deg, 0) + 2) * (c.npoints + 2) + 2 * c.npoints + 8
    for _ in range(cap):
        if deg < 0:
            return ReductionResult(False, DivisorClass(deg, tuple(mult)), tracer.done())

        pairing_line = deg - sum(mult[:l])
        if pairing_line < 0:
            # one copy raises the pairing by l-1 and lowers deg by 1;
            # stop early if deg would cross below zero
            needed = (-pairing_line + l - 2) // (l - 1)
            copies = min(needed, deg + 1)
            tracer.record(curves.line_transform, copies)
            deg -= copies
            for i in range(l):
                mult[i] -= copies
            continue

        violated = None
        for i in range(l):
            pairing = deg - mult[i] - mult[l]
            if pairing < 0:
                violated = (i, -pairing)
                break
        if violated is not None:
            i, copies = violated
            tracer.record(curves.joining_lines[i], copies)
            deg -= copies
            mult[i] -= copies
            mult[l] -= copies
            continue

        cleared = False
        for i, a in enumerate(mult):
            if a < 0:
                tracer.record(curves.exceptional[i], -a)
                mult[i] = 0
                cleared = True
                break
        if cleared:
            continue

        return ReductionResult(True, DivisorClass(deg, tuple(mult)), tracer.done())

    raise AssertionError("nef reduction failed to terminate; divisor arithmetic bug")


def h0(c: Configuration, f: DivisorClass) -> int:
    """Dimension of the space of global sections of the class f."""
    result = reduce_to_nef(c, f)
    if not result.effective:
        return 0
    return _h0_of_nef(c, result.final)


def _h0_of_nef(c: Configuration, h: DivisorClass) -> int:
    num = h.dot(h) - h.dot(canonical_class(c))
    assert num % 2 == 0, f"odd Riemann-Roch numerator for nef class {h}"
    value = num // 2 + 1
    assert value >= 0
    return value


def scan_ceiling(c: Configuration, m: int) -> int:
    """Degree from which (d; m,..,m) is nef and no new generators appear.

    Callers scanning degrees may stop at l*m.
    """
    return c.l * m


def closed_form_reduction(c: Configuration, m: int, d: int) -> ReductionResult:
    """Non-iterative reduction of the class (d; m,..,m), for l(l-1) | m.

    Four degree ranges:

    * d >= l*m: already nef, nothing subtracted.
    * 2m <= d < l*m: ceil((l*m - d)/(l - 1)) copies of the line transform.
    * 2m - m/l <= d < 2m: additionally 2m - d copies of every joining line.
    * d < 2m - m/l: not effective; the same formal subtraction is returned
      as the trace, and the resulting witness class has negative degree.
    """
    l = c.l
    if m < 1:
        raise ValueError("multiplicity m must be >= 1")
    if m % (l * (l - 1)) != 0:
        raise ValueError(f"closed form requires l(l-1) = {l * (l - 1)} to divide m = {m}")
    if d < 0:
        raise ValueError("degree d must be >= 0")

    f = fatpoint_class(c, d, m)
    if d >= l * m:
        return ReductionResult(True, f, ())

    curves = neg_curves(c)
    line_copies = -((d - l * m) // (l - 1))  # ceil((l*m - d)/(l - 1))
    if d >= 2 * m:
        final = DivisorClass(d - line_copies,
                             tuple(m - line_copies for _ in range(l)) + (m,))
        return ReductionResult(True, final, ((curves.line_transform, line_copies),))

    join_copies = 2 * m - d
    final = DivisorClass(
        d - line_copies - join_copies * l,
        tuple(m - line_copies - join_copies for _ in range(l)) + (m - join_copies * l,),
    )
    trace = ((curves.line_transform, line_copies),) + tuple(
        (b, join_copies) for b in curves.joining_lines
    )
    effective = d * l >= 2 * m * l - m  # d >= 2m - m/l
    if effective:
        assert final.deg >= 0
    else:
        assert final.deg < 0
    return ReductionResult(effective, final, trace)
