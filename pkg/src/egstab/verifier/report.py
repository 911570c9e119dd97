"""Census reports: counts, witnesses and counterexamples, mergeable across shards."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA = "egstab.census/1"


@dataclass
class CensusReport:
    """Outcome of one census.

    ``scanned`` counts graphs delivered by the enumeration, ``filtered`` those
    that meet the statement's hypothesis; ``tallies`` split ``filtered`` by
    verdict. Witness and counterexample lists hold canonical graph6 strings,
    sorted and without repeats. ``maxima`` keeps per-key maxima and ``flags``
    per-key disjunctions; both merge the obvious way.
    """

    name: str
    params: dict
    scanned: int = 0
    filtered: int = 0
    tallies: dict[str, int] = field(default_factory=dict)
    witnesses: list[str] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)
    maxima: dict[str, int] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def confirmed(self) -> bool:
        return not self.counterexamples

    def tally(self, key: str, by: int = 1) -> None:
        self.tallies[key] = self.tallies.get(key, 0) + by

    def note_max(self, key: str, value: int) -> None:
        if key not in self.maxima or value > self.maxima[key]:
            self.maxima[key] = value

    def flag(self, key: str, value: bool) -> None:
        self.flags[key] = self.flags.get(key, False) or bool(value)

    def add_witness(self, g6: str) -> None:
        self.witnesses.append(g6)

    def add_counterexample(self, g6: str) -> None:
        self.counterexamples.append(g6)

    def normalize(self) -> "CensusReport":
        self.witnesses = sorted(set(self.witnesses))
        self.counterexamples = sorted(set(self.counterexamples))
        self.tallies = dict(sorted(self.tallies.items()))
        self.maxima = dict(sorted(self.maxima.items()))
        self.flags = dict(sorted(self.flags.items()))
        return self

    def to_dict(self, *, timing: bool = True) -> dict:
        self.normalize()
        out = {
            "schema": SCHEMA,
            "census": self.name,
            "params": dict(sorted(self.params.items())),
            "scanned": self.scanned,
            "filtered": self.filtered,
            "tallies": self.tallies,
            "maxima": self.maxima,
            "flags": self.flags,
            "witnesses": self.witnesses,
            "counterexamples": self.counterexamples,
            "confirmed": self.confirmed,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, *, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), indent=2, sort_keys=False)

    def to_text(self, *, timing: bool = True) -> str:
        d = self.to_dict(timing=timing)
        lines = [f"census {self.name}"]
        lines += [f"param {k} = {v}" for k, v in d["params"].items()]
        lines.append(f"scanned = {self.scanned}")
        lines.append(f"filtered = {self.filtered}")
        lines += [f"tally {k} = {v}" for k, v in self.tallies.items()]
        lines += [f"max {k} = {v}" for k, v in self.maxima.items()]
        lines += [f"flag {k} = {str(v).lower()}" for k, v in self.flags.items()]
        lines.append(f"witnesses = {len(self.witnesses)}")
        lines += [f"witness {g}" for g in self.witnesses]
        lines.append(f"counterexamples = {len(self.counterexamples)}")
        lines += [f"counterexample {g}" for g in self.counterexamples]
        lines.append(f"status = {'confirmed' if self.confirmed else 'COUNTEREXAMPLE'}")
        if timing:
            lines.append(f"wall_time = {self.wall_time:.3f}")
        return "\n".join(lines) + "\n"


def merge(a: CensusReport, b: CensusReport) -> CensusReport:
    """Combine two shard reports of the same census (associative, commutative)."""
    if a.name != b.name or a.params != b.params:
        raise ValueError(f"cannot merge {a.name}{a.params} with {b.name}{b.params}")
    out = CensusReport(a.name, dict(a.params), a.scanned + b.scanned, a.filtered + b.filtered)
    for src in (a, b):
        for k, v in src.tallies.items():
            out.tally(k, v)
        for k, v in src.maxima.items():
            out.note_max(k, v)
        for k, v in src.flags.items():
            out.flag(k, v)
        out.witnesses += src.witnesses
        out.counterexamples += src.counterexamples
    out.wall_time = a.wall_time + b.wall_time
    return out.normalize()


def merge_all(reports) -> CensusReport:
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    out = reports[0]
    for r in reports[1:]:
        out = merge(out, r)
    return out.normalize()
