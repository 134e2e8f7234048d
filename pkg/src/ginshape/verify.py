"""Cross-checks between the divisor-theoretic route and the oracle.

Each check returns a CheckResult; the CLI prints them as a matrix and
the acceptance tests assert them.  On failure the detail pinpoints the
first mismatching (l, m, d).
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import Configuration, fatpoint_class
from .generators import closed_form_table, generator_table, hilbert_function
from .nef import closed_form_reduction, reduce_to_nef, scan_ceiling
from .oracle import default_points, oracle_generator_counts, oracle_gin, oracle_hilbert
from .staircase import build_staircase


@dataclass(frozen=True)
class CheckResult:
    name: str
    l: int
    m: int
    ok: bool
    detail: str = ""

    def label(self) -> str:
        return f"{self.name} (l={self.l}, m={self.m})"


def divides(l: int, m: int) -> bool:
    return m % (l * (l - 1)) == 0


def check_procedure_vs_closed_form(c: Configuration, m: int) -> CheckResult:
    """Iterative reduction against the closed form, d = 0 .. l*m + 3."""
    name = "procedure-vs-closed-form"
    for d in range(scan_ceiling(c, m) + 4):
        step = reduce_to_nef(c, fatpoint_class(c, d, m))
        fast = closed_form_reduction(c, m, d)
        if step.effective != fast.effective:
            return CheckResult(name, c.l, m, False,
                               f"d={d}: effectivity {step.effective} vs {fast.effective}")
        if step.effective and step.final != fast.final:
            return CheckResult(name, c.l, m, False,
                               f"d={d}: nef part {step.final} vs {fast.final}")
        for r in (step, fast):
            if r.reconstruct() != fatpoint_class(c, d, m):
                return CheckResult(name, c.l, m, False, f"d={d}: trace does not conserve class")
    return CheckResult(name, c.l, m, True)


def check_table_vs_closed_form(c: Configuration, m: int) -> CheckResult:
    """Scanned generator table against the closed-form table."""
    name = "table-vs-closed-form"
    scanned = generator_table(c, m)
    direct = closed_form_table(c.l, m)
    if scanned.counts != direct.counts or scanned.alpha != direct.alpha:
        return CheckResult(name, c.l, m, False,
                           f"scan {scanned.alpha}:{scanned.counts} vs closed {direct.alpha}:{direct.counts}")
    return CheckResult(name, c.l, m, True)


def check_hilbert_vs_oracle(c: Configuration, m: int, points=None) -> CheckResult:
    """Divisor-theoretic Hilbert function against the rank computation."""
    name = "hilbert-vs-oracle"
    ps = points if points is not None else default_points(c.l)
    for d in range(scan_ceiling(c, m) + 3):
        lhs = hilbert_function(c, m, d)
        rhs = oracle_hilbert(ps, m, d)
        if lhs != rhs:
            return CheckResult(name, c.l, m, False,
                               f"first mismatch at l={c.l} m={m} d={d}: divisor={lhs} oracle={rhs}")
    return CheckResult(name, c.l, m, True)


def check_generators_vs_oracle(c: Configuration, m: int) -> CheckResult:
    """Generator counts against multiplication-map coranks."""
    name = "generators-vs-oracle"
    table = generator_table(c, m)
    counted = oracle_generator_counts(default_points(c.l), m, scan_ceiling(c, m) + 1)
    if table.counts != counted:
        d = _first_count_mismatch(table.counts, counted)
        return CheckResult(name, c.l, m, False,
                           f"first mismatch at l={c.l} m={m} d={d}: "
                           f"divisor={table.counts.get(d, 0)} oracle={counted.get(d, 0)}")
    return CheckResult(name, c.l, m, True)


def check_gin_vs_oracle(c: Configuration, m: int, seed: int = 0) -> CheckResult:
    """Assembled staircase against the pivot-column gin, on two seeds."""
    name = "gin"
    table = generator_table(c, m)
    if not table.cwl_certified:
        return CheckResult(name, c.l, m, True, "skipped (table not certified)")
    assembled = build_staircase(table)
    dmax = scan_ceiling(c, m) + 1
    for s in (seed, seed + 1):
        observed = oracle_gin(default_points(c.l), m, dmax, seed=s)
        if (observed.alpha, observed.lam) != (assembled.alpha, assembled.lam):
            return CheckResult(name, c.l, m, False,
                               f"seed {s}: staircase {observed.alpha}:{observed.lam} "
                               f"vs assembled {assembled.alpha}:{assembled.lam}")
    return CheckResult(name, c.l, m, True, f"OK ({assembled.ngens} generators)")


def _first_count_mismatch(a: dict[int, int], b: dict[int, int]) -> int:
    return min(d for d in set(a) | set(b) if a.get(d, 0) != b.get(d, 0))


def run_checks(l: int, ms, seed: int = 0, with_oracle: bool = True,
               with_gin: bool = False) -> list[CheckResult]:
    """The full suite for each m: fast-path agreement where it applies,
    then the oracle comparisons, then gin equality when requested."""
    c = Configuration(l)
    results = []
    for m in ms:
        if divides(l, m):
            results.append(check_procedure_vs_closed_form(c, m))
            results.append(check_table_vs_closed_form(c, m))
        if with_oracle:
            results.append(check_hilbert_vs_oracle(c, m))
            results.append(check_generators_vs_oracle(c, m))
        if with_gin:
            results.append(check_gin_vs_oracle(c, m, seed=seed))
    return results
