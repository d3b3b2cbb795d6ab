"""Enumeration of trihedral groups for batch verification."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .groups import DiagonalGroup, canonical_key, closure_exponents, generate_diagonal_group
from .resolution import ResolutionReport, build_report

__all__ = ["SweepEntry", "sweep_specs", "run_sweep"]

Triple = tuple[int, int, int]


@dataclass(frozen=True, order=True)
class SweepEntry:
    r: int
    generators: tuple[Triple, ...]

    def group(self) -> DiagonalGroup:
        return generate_diagonal_group(self.r, self.generators)

    @property
    def label(self) -> str:
        return f"r={self.r} " + " ".join(f"({a},{b},{c})" for a, b, c in self.generators)


def _sl_triples(r: int) -> list[Triple]:
    return [(a, b, (-a - b) % r) for a in range(r) for b in range(r)]


def sweep_specs(max_r: int, two_gen_max_r: int | None = None) -> list[SweepEntry]:
    """Rotation closures of <g> for r <= max_r, and of <g, h> for r <= two_gen_max_r.

    Groups are deduplicated by their element sets (independent of the
    exponent they are written over); the first entry in (r, generators)
    order is kept.
    """
    seen: set = set()
    entries: list[SweepEntry] = []
    cyclic_by_r: dict[int, list[tuple[Triple, frozenset]]] = {}

    top = max(max_r, two_gen_max_r or 0)
    for r in range(1, top + 1):
        local: dict[frozenset, Triple] = {}
        for g in _sl_triples(r):
            exps = closure_exponents(r, [g])
            local.setdefault(exps, g)
            if r <= max_r:
                key = canonical_key(r, exps)
                if key not in seen:
                    seen.add(key)
                    entries.append(SweepEntry(r, (g,)))
        cyclic_by_r[r] = [(g, exps) for exps, g in local.items()]

    if two_gen_max_r:
        for r in range(1, two_gen_max_r + 1):
            subgroups = sorted(cyclic_by_r[r])
            for i, (g, eg) in enumerate(subgroups):
                for h, eh in subgroups[i + 1:]:
                    if eh <= eg or eg <= eh:
                        continue
                    key = canonical_key(r, closure_exponents(r, [g, h]))
                    if key not in seen:
                        seen.add(key)
                        entries.append(SweepEntry(r, (g, h)))
    return sorted(entries)


def _report(entry: SweepEntry) -> ResolutionReport:
    return build_report(entry.group(), label=entry.label)


def run_sweep(entries: list[SweepEntry], jobs: int = 1) -> list[ResolutionReport]:
    """Reports in the order of ``entries`` regardless of completion order."""
    if jobs <= 1:
        return [_report(e) for e in entries]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_report, entries, chunksize=4))
