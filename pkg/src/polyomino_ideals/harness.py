"""Conjecture harness: batch classification, height and Koenig search over
an enumerated family, persisted as an append-only JSONL log.

Each instance yields one self-delimiting log line.  Runs are resumable
(already-recorded canonical forms are skipped) and deterministic: with
timestamps disabled (the default) two runs of the same configuration and
tool version produce byte-identical logs.  The summary is recomputed from
the log file, never from in-memory state.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone

from . import __version__ as tool_version
from .configurations import closed_path_sequence, is_prime_closed_path
from .dimension import height as compute_height
from .enumeration import EnumerationConfig, enumerate_polyominoes
from .errors import BudgetExceededError, LogCorruptError
from .koenig import certificate_from_json, certificate_to_json, search_certificate
from .polyomino import Polyomino, build, classify

HEIGHT_ORDER_ID = "lex1"


@dataclass(frozen=True)
class HarnessRecord:
    """One per-instance result row of the harness log."""

    cells: tuple
    rank: int
    vertices: int
    simple: bool
    thin: bool
    closed_path: bool
    prime: bool | None
    height_value: int | None
    height_status: str  # ok | budget | skipped
    koenig_status: str  # certificate | exhausted | budget | skipped
    koenig_certificate: dict | None
    timestamp: str | None
    tool_version: str

    def to_json_obj(self) -> dict:
        return {
            "cells": [list(c) for c in self.cells],
            "rank": self.rank,
            "vertices": self.vertices,
            "simple": self.simple,
            "thin": self.thin,
            "closed_path": self.closed_path,
            "prime": self.prime,
            "height": {
                "value": self.height_value,
                "order": HEIGHT_ORDER_ID,
                "status": self.height_status,
            },
            "koenig": {
                "status": self.koenig_status,
                "certificate": self.koenig_certificate,
            },
            "timestamp": self.timestamp,
            "tool_version": self.tool_version,
        }

    def validate_consistency(self) -> list[str]:
        problems = []
        if self.closed_path and self.vertices != 2 * self.rank:
            problems.append("closed path but vertices != 2*rank")
        if self.closed_path and self.prime is None:
            problems.append("closed path without prime flag")
        if not self.closed_path and self.prime is not None:
            problems.append("prime flag on a non-closed-path")
        if self.height_status == "ok" and self.height_value is None:
            problems.append("height ok without value")
        if self.koenig_status == "certificate" and not self.koenig_certificate:
            problems.append("certificate status without certificate")
        return problems


@dataclass
class HarnessSummary:
    tested: int = 0
    height_matches: int = 0
    height_mismatches: int = 0
    koenig_found: int = 0
    koenig_exhausted: int = 0
    budgets: int = 0
    witnesses: list = field(default_factory=list)
    log_path: str = ""
    new_records: int = 0

    def to_json_obj(self) -> dict:
        return {
            "tested": self.tested,
            "height_matches": self.height_matches,
            "height_mismatches": self.height_mismatches,
            "koenig_found": self.koenig_found,
            "koenig_exhausted": self.koenig_exhausted,
            "budgets": self.budgets,
            "witnesses": self.witnesses,
            "log_path": self.log_path,
            "new_records": self.new_records,
        }


def read_log(path) -> list[dict]:
    """Parse a harness log; raises LogCorruptError naming the bad line."""
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LogCorruptError(path, lineno, str(exc)) from None
            if not isinstance(obj, dict) or "cells" not in obj:
                raise LogCorruptError(path, lineno, "missing 'cells'")
            records.append(obj)
    return records


def record_for(p: Polyomino, *, skip_height: bool = False, budget: int | None = None,
               timestamps: bool = False) -> HarnessRecord:
    """Classify, measure and search one instance."""
    report = classify(p)
    seq = closed_path_sequence(p)
    is_cp = seq is not None
    prime = is_prime_closed_path(p) if is_cp else None

    height_value = None
    height_status = "skipped"
    if not skip_height:
        try:
            height_value = compute_height(p, budget=budget)
            height_status = "ok"
        except BudgetExceededError:
            height_status = "budget"

    if is_cp:
        h = p.rank
    elif height_status == "ok":
        h = height_value
    else:
        h = None

    cert_json = None
    if h is None:
        koenig_status = "budget" if height_status == "budget" else "skipped"
    else:
        try:
            cert = search_certificate(p, h=h, budget=budget)
        except BudgetExceededError:
            koenig_status = "budget"
        else:
            if cert is None:
                koenig_status = "exhausted"
            else:
                koenig_status = "certificate"
                cert_json = certificate_to_json(cert)

    return HarnessRecord(
        cells=tuple(sorted(p.cell_set)),
        rank=p.rank,
        vertices=report.vertex_count,
        simple=report.simple,
        thin=report.thin,
        closed_path=is_cp,
        prime=prime,
        height_value=height_value,
        height_status=height_status,
        koenig_status=koenig_status,
        koenig_certificate=cert_json,
        timestamp=datetime.now(timezone.utc).isoformat() if timestamps else None,
        tool_version=tool_version,
    )


def run_harness(config: EnumerationConfig, output_path, *, figures_dir=None,
                budget: int | None = None, skip_height: bool = False,
                timestamps: bool = False) -> HarnessSummary:
    """Run the harness over the configured enumeration, appending one JSON
    line per new instance, then summarise the full log."""
    done = set()
    if os.path.exists(output_path):
        for obj in read_log(output_path):
            done.add(tuple(tuple(c) for c in obj["cells"]))

    new_records = 0
    with open(output_path, "a", encoding="utf-8") as fh:
        for p in enumerate_polyominoes(config):
            key = tuple(sorted(p.cell_set))
            if key in done:
                continue
            rec = record_for(p, skip_height=skip_height, budget=budget, timestamps=timestamps)
            fh.write(json.dumps(rec.to_json_obj(), sort_keys=True, separators=(",", ":")) + "\n")
            fh.flush()
            done.add(key)
            new_records += 1

    summary = summarize_log(output_path)
    summary.new_records = new_records
    if figures_dir:
        _write_figures(output_path, figures_dir, summary)
    return summary


def summarize_log(path) -> HarnessSummary:
    """Aggregate outcome counts and counterexample witnesses from the log."""
    summary = HarnessSummary(log_path=str(path))
    for obj in read_log(path):
        summary.tested += 1
        h = obj["height"]
        if h["status"] == "ok":
            if h["value"] == obj["rank"]:
                summary.height_matches += 1
            else:
                summary.height_mismatches += 1
                if not obj["simple"]:
                    summary.witnesses.append({"kind": "height", "record": obj})
        elif h["status"] == "budget":
            summary.budgets += 1
        k = obj["koenig"]
        if k["status"] == "certificate":
            summary.koenig_found += 1
        elif k["status"] == "exhausted":
            summary.koenig_exhausted += 1
            if not obj["simple"] and obj["thin"]:
                summary.witnesses.append({"kind": "koenig", "record": obj})
        elif k["status"] == "budget":
            summary.budgets += 1
    return summary


def reverify_log(path, recompute_heights: bool = True) -> list[str]:
    """Re-check every record: internal consistency, stored certificates
    passing verification against the rebuilt polyomino, and stored heights
    re-derivable from scratch."""
    from .koenig import verify_certificate

    problems = []
    for i, obj in enumerate(read_log(path), start=1):
        rec = record_from_json(obj)
        for msg in rec.validate_consistency():
            problems.append(f"record {i}: {msg}")
        p = build(rec.cells)
        if rec.koenig_certificate:
            cert = certificate_from_json(rec.koenig_certificate)
            report = verify_certificate(p, cert)
            if not report.ok:
                problems.append(
                    f"record {i}: stored certificate fails "
                    + ", ".join(c.name for c in report.failed())
                )
        if recompute_heights and rec.height_status == "ok":
            again = compute_height(p)
            if again != rec.height_value:
                problems.append(
                    f"record {i}: stored height {rec.height_value} != recomputed {again}"
                )
    return problems


def record_from_json(obj: dict) -> HarnessRecord:
    return HarnessRecord(
        cells=tuple(tuple(c) for c in obj["cells"]),
        rank=obj["rank"],
        vertices=obj["vertices"],
        simple=obj["simple"],
        thin=obj["thin"],
        closed_path=obj["closed_path"],
        prime=obj["prime"],
        height_value=obj["height"]["value"],
        height_status=obj["height"]["status"],
        koenig_status=obj["koenig"]["status"],
        koenig_certificate=obj["koenig"]["certificate"],
        timestamp=obj["timestamp"],
        tool_version=obj["tool_version"],
    )


def _write_figures(log_path, figures_dir, summary: HarnessSummary) -> None:
    from .render import save_polyomino_figure, save_summary_figure

    os.makedirs(figures_dir, exist_ok=True)
    records = read_log(log_path)
    save_summary_figure(records, os.path.join(figures_dir, "summary.png"))
    for i, witness in enumerate(summary.witnesses):
        rec = witness["record"]
        p = build([tuple(c) for c in rec["cells"]])
        save_polyomino_figure(
            p,
            os.path.join(figures_dir, f"witness_{i:03d}_{witness['kind']}.png"),
            title=f"{witness['kind']} witness, rank {rec['rank']}",
        )
