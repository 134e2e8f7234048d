"""Report assembly and serialization (JSON, CSV, plain table).

Every rational number is serialized as {"num": ..., "den": ...} with a
positive denominator in lowest terms, so JSON round-trips losslessly.
The JSON layout is versioned; see docs/report_schema.json.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction

from .divisors import Configuration
from .generators import GeneratorTable, generator_table
from .staircase import (
    GinStaircase,
    Polytope2D,
    build_staircase,
    limiting_shape,
    newton_polytope,
    polytope_area,
    scaled_polytope,
)
from .verify import CheckResult, divides, run_checks

SCHEMA_VERSION = 1


def fraction_to_json(q) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def fraction_from_json(obj) -> Fraction:
    return Fraction(obj["num"], obj["den"])


def polytope_to_json(p: Polytope2D) -> list:
    return [[fraction_to_json(x), fraction_to_json(y)] for x, y in p.vertices]


def polytope_from_json(obj) -> Polytope2D:
    return Polytope2D(tuple((fraction_from_json(x), fraction_from_json(y)) for x, y in obj))


def staircase_to_json(s: GinStaircase) -> dict:
    return {
        "alpha": s.alpha,
        "m": s.m,
        "lambda": [[i, s.lam[i]] for i in range(s.alpha)],
    }


def checks_to_json(checks: list[CheckResult]) -> dict:
    return {
        "all_pass": all(r.ok for r in checks),
        "checks": [
            {"name": r.name, "l": r.l, "m": r.m, "pass": r.ok, "detail": r.detail}
            for r in checks
        ],
    }


def analysis_report(l: int, m: int, verify: bool = False, seed: int = 0,
                    with_gin: bool = False, with_oracle: bool = True) -> dict:
    """Run the pipeline for one (l, m) and package the results.

    The staircase and polytope blocks are present only when the table is
    certified componentwise linear; with ``verify`` the oracle
    comparisons run and land under "verification".
    """
    c = Configuration(l)
    table = generator_table(c, m)
    report = {
        "schema_version": SCHEMA_VERSION,
        "kind": "analysis",
        "l": l,
        "m": m,
        "alpha": table.alpha,
        "total_generators": table.total,
        "counts": {str(d): v for d, v in sorted(table.counts.items())},
        "cwl_certified": table.cwl_certified,
        "m_multiple_of_l_times_l_minus_1": divides(l, m),
    }
    if table.cwl_certified:
        stair = build_staircase(table)
        newton = newton_polytope(stair)
        scaled = scaled_polytope(newton, m)
        limit = limiting_shape(l)
        report["staircase"] = staircase_to_json(stair)
        report["newton_polytope"] = polytope_to_json(newton)
        report["scaled_polytope"] = polytope_to_json(scaled)
        report["limiting_shape"] = polytope_to_json(limit)
        report["areas"] = {
            "scaled": fraction_to_json(polytope_area(scaled)),
            "limiting": fraction_to_json(polytope_area(limit)),
        }
        report["scaled_matches_limiting"] = scaled.vertices == limit.vertices
    if verify:
        checks = run_checks(l, [m], seed=seed, with_oracle=with_oracle, with_gin=with_gin)
        report["verification"] = checks_to_json(checks)
    return report


def shape_report(l: int, overlay_m: int | None = None) -> dict:
    """The limiting shape for l, optionally with a finite-m overlay."""
    limit = limiting_shape(l)
    report = {
        "schema_version": SCHEMA_VERSION,
        "kind": "shape",
        "l": l,
        "vertices": polytope_to_json(limit),
        "area": fraction_to_json(polytope_area(limit)),
    }
    if overlay_m is not None:
        table = generator_table(Configuration(l), overlay_m)
        if not table.cwl_certified:
            raise ValueError(f"m={overlay_m} is not certified; no staircase to overlay")
        scaled = scaled_polytope(newton_polytope(build_staircase(table)), overlay_m)
        report["overlay_m"] = overlay_m
        report["overlay_vertices"] = polytope_to_json(scaled)
        report["overlay_matches"] = scaled.vertices == limit.vertices
    return report


def _fmt_frac(obj) -> str:
    q = fraction_from_json(obj)
    return str(q)


def _fmt_vertices(vertices) -> str:
    return "  ".join(f"({_fmt_frac(x)}, {_fmt_frac(y)})" for x, y in vertices)


def counts_csv(report: dict) -> str:
    """Generator counts as delimited text, header row d,v_d."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d", "v_d"])
    for d, v in sorted((int(d), v) for d, v in report["counts"].items()):
        writer.writerow([d, v])
    return buf.getvalue()


def analysis_table(report: dict) -> str:
    lines = [
        f"configuration: {report['l']} collinear points + 1 off the line",
        f"symbolic power m = {report['m']}",
        f"alpha = {report['alpha']}   generators = {report['total_generators']}   "
        f"componentwise linear certified = {report['cwl_certified']}",
        "",
        "  d  v_d",
    ]
    for d, v in sorted((int(d), v) for d, v in report["counts"].items()):
        lines.append(f"{d:>3}  {v}")
    if "staircase" in report:
        lam = report["staircase"]["lambda"]
        lines.append("")
        lines.append("gin staircase generators (x-exp, y-exp):")
        gens = [(report["alpha"], 0)] + [(i, y) for i, y in sorted(lam, reverse=True)]
        lines.append("  " + "  ".join(f"({a},{b})" for a, b in gens))
        lines.append(f"newton polytope:  {_fmt_vertices(report['newton_polytope'])}")
        lines.append(f"scaled by 1/m:    {_fmt_vertices(report['scaled_polytope'])}")
        lines.append(f"limiting shape:   {_fmt_vertices(report['limiting_shape'])}")
        lines.append(
            f"areas: scaled = {_fmt_frac(report['areas']['scaled'])}, "
            f"limiting = {_fmt_frac(report['areas']['limiting'])}; "
            f"scaled matches limiting: {report['scaled_matches_limiting']}"
        )
    if "verification" in report:
        lines.append("")
        lines.append(verification_table(report["verification"]))
    return "\n".join(lines) + "\n"


def shape_table(report: dict) -> str:
    lines = [
        f"limiting shape for l = {report['l']}",
        f"vertices: {_fmt_vertices(report['vertices'])}",
        f"area under the shape: {_fmt_frac(report['area'])}",
    ]
    if "overlay_m" in report:
        lines.append(
            f"overlay (m = {report['overlay_m']} scaled): "
            f"{_fmt_vertices(report['overlay_vertices'])}  "
            f"coincides: {report['overlay_matches']}"
        )
    return "\n".join(lines) + "\n"


def verification_table(verification: dict) -> str:
    lines = ["verification:"]
    for item in verification["checks"]:
        status = "OK" if item["pass"] else "FAIL"
        tail = f" {item['detail']}" if item["detail"] else ""
        if item["name"] == "gin" and item["pass"] and item["detail"].startswith("OK"):
            lines.append(f"  gin: {item['detail']}")
        else:
            lines.append(f"  {item['name']} (l={item['l']}, m={item['m']}): {status}{tail}")
    lines.append("all checks passed" if verification["all_pass"] else "VERIFICATION FAILED")
    return "\n".join(lines)
