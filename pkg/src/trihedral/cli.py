"""Command line: analyze, triangulate, verify and sweep trihedral groups.

Input is a JSON document {"r": int, "generators": [[a, b, c], ...], "label": str}.
A generator may also be given as {"r": n, "exponents": [a, b, c]} with its own
denominator; all generators are then rewritten over the lcm.

Exit codes: 0 verified, 1 an identity failed, 2 input error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import InvariantViolation, SpecError
from .groups import DiagonalGroup, generate_diagonal_group, make_diagonal
from .oracle import (
    OracleBoundExceeded,
    commuting_pairs,
    conjugacy_count_bruteforce,
    oracle_bound,
)
from .resolution import ResolutionReport, build_report
from .svg import render_svg
from .sweep import run_sweep, sweep_specs
from .triangulation import build_symmetric_triangulation

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass(frozen=True)
class GroupSpec:
    r: int
    generators: tuple[tuple[int, int, int], ...]
    label: str | None = None

    def group(self) -> DiagonalGroup:
        return generate_diagonal_group(self.r, self.generators)


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SpecError(f"{what} must be an integer, got {x!r}")
    return x


def _triple(x, what: str) -> tuple[int, int, int]:
    if not isinstance(x, list) or len(x) != 3:
        raise SpecError(f"{what} must be a list of three integers, got {x!r}")
    return tuple(_int(v, what) for v in x)


def parse_spec(text: str) -> GroupSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SpecError("group spec must be a JSON object")
    unknown = set(data) - {"r", "generators", "label"}
    if unknown:
        raise SpecError(f"unknown keys: {', '.join(sorted(unknown))}")

    gens_raw = data.get("generators", [])
    if not isinstance(gens_raw, list):
        raise SpecError("'generators' must be a list")
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise SpecError("'label' must be a string")

    default_r = _int(data["r"], "'r'") if "r" in data else None
    parsed = []
    for i, g in enumerate(gens_raw):
        if isinstance(g, dict):
            parsed.append((_int(g.get("r"), f"generators[{i}].r"),
                           _triple(g.get("exponents"), f"generators[{i}].exponents")))
        else:
            if default_r is None:
                raise SpecError(f"generators[{i}] has no denominator and 'r' is missing")
            parsed.append((default_r, _triple(g, f"generators[{i}]")))

    denominators = [d for d, _ in parsed] + ([default_r] if default_r is not None else [])
    if any(d < 1 for d in denominators):
        raise SpecError("denominators must be positive")
    r = math.lcm(*denominators) if denominators else 1
    gens = []
    for d, (a, b, c) in parsed:
        if (a + b + c) % d:
            raise SpecError(
                f"generator ({a},{b},{c}) over r={d} is not in SL(3,C): "
                f"{a + b + c} is not divisible by {d}"
            )
        f = r // d
        gens.append(make_diagonal(r, a * f, b * f, c * f).exponents)
    return GroupSpec(r, tuple(gens), label)


def load_spec(path: str) -> GroupSpec:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from None
    return parse_spec(text)


def _emit(report: ResolutionReport, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
        return
    label = f"[{report.label}] " if report.label else ""
    print(label + report.summary())
    for err in report.stage_errors:
        print(f"  {err['stage']}: {err['message']}")


def _exit_code(report: ResolutionReport) -> int:
    if report.has_invariant_violation():
        return EXIT_INTERNAL
    return EXIT_OK if report.verified else EXIT_FAILED


def cmd_analyze(args) -> int:
    spec = load_spec(args.file)
    report = build_report(spec.group(), label=spec.label)
    _emit(report, args.format)
    return _exit_code(report)


def cmd_triangulate(args) -> int:
    spec = load_spec(args.file)
    group = spec.group()
    tri = build_symmetric_triangulation(group)
    Path(args.out).write_text(json.dumps(tri.to_dict(), indent=2) + "\n", encoding="utf-8")
    if args.svg:
        Path(args.svg).write_text(render_svg(tri, spec.label), encoding="utf-8")
    report = build_report(group, label=spec.label, triangulation=tri)
    _emit(report, args.format)
    return _exit_code(report)


def cmd_verify(args) -> int:
    spec = load_spec(args.file)
    group = spec.group()
    report = build_report(group, label=spec.label)
    if 3 * group.order <= oracle_bound():
        try:
            classes = conjugacy_count_bruteforce(group)
            pairs = commuting_pairs(group)
        except OracleBoundExceeded:
            pass
        else:
            report.checks["oracle_classes"] = classes == report.conj_enum
            report.checks["oracle_commuting_pairs"] = pairs == classes * 3 * group.order
            report.verified = report.verified and all(report.checks.values())
    _emit(report, args.format)
    return _exit_code(report)


def cmd_sweep(args) -> int:
    two_gen = min(args.two_gen_max_r, args.max_r) if args.two_gen else None
    entries = sweep_specs(args.max_r, two_gen)
    reports = run_sweep(entries, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for rep in reports:
            _emit(rep, "text")
        ok = sum(r.verified for r in reports)
        print(f"{ok}/{len(reports)} groups verified")
    codes = [_exit_code(r) for r in reports]
    return max(codes, default=EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trihedral",
        description="Crepant resolutions of trihedral quotient singularities C^3/G.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print the resolution report for a group")
    p.add_argument("file", help="group spec JSON file, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("triangulate", help="write the symmetric triangulation")
    p.add_argument("file")
    p.add_argument("--out", required=True, help="triangulation JSON output path")
    p.add_argument("--svg", help="optional SVG figure output path")
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("verify", help="exit 0 iff chi equals the class count")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify every small rotation-closed group")
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--two-gen", action="store_true", help="also try pairs of generators")
    p.add_argument("--two-gen-max-r", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"invariant violation in {exc.stage}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
