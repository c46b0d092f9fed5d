"""Persistence for sweep outcomes and per-graph energy reports.

CSV rows carry the fixed header
``sweep,order,edges,canonical_code,energy,mu1,deficit,status`` with floats
in shortest round-trip form, rows sorted by (order, code).  JSON carries
the same rows plus the per-order aggregates.  Wall time is printed, never
persisted, so reports from different runs and worker counts compare
byte-for-byte.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

from .spectra import EnergyReport
from .sweeps import ConjectureRow, VerifyOutcome

CSV_HEADER = "sweep,order,edges,canonical_code,energy,mu1,deficit,status"
CONJECTURE_HEADER = "k,order,energy,ratio"

_STATUS = ("pass", "exception", "borderline")


def _row(sweep: str, rep: EnergyReport, status: str) -> str:
    if status not in _STATUS:
        raise ValueError(f"unknown status {status!r}")
    return ",".join(
        (
            sweep,
            str(rep.n),
            str(rep.m),
            rep.key,
            repr(rep.energy),
            repr(rep.mu1),
            repr(rep.deficit),
            status,
        )
    )


def outcome_rows(outcome: VerifyOutcome) -> list[tuple[EnergyReport, str]]:
    rows = [(r, "exception") for r in outcome.counterexamples]
    rows += [(r, "borderline") for r in outcome.borderline]
    rows.sort(key=lambda item: (item[0].n, item[0].key))
    return rows


def outcome_to_csv(outcome: VerifyOutcome) -> str:
    lines = [CSV_HEADER]
    lines += [_row(outcome.sweep, rep, status) for rep, status in outcome_rows(outcome)]
    return "\n".join(lines) + "\n"


def outcome_to_json(outcome: VerifyOutcome) -> str:
    payload = {
        "sweep": outcome.sweep,
        "total": outcome.total,
        "counterexamples": [asdict(r) for r in outcome.counterexamples],
        "borderline": [asdict(r) for r in outcome.borderline],
        "order_stats": [asdict(s) for s in outcome.order_stats],
    }
    return json.dumps(payload, indent=2) + "\n"


def reports_to_csv(sweep: str, rows: list[tuple[EnergyReport, str]]) -> str:
    lines = [CSV_HEADER]
    lines += [_row(sweep, rep, status) for rep, status in rows]
    return "\n".join(lines) + "\n"


def reports_to_json(sweep: str, rows: list[tuple[EnergyReport, str]]) -> str:
    payload = {
        "sweep": sweep,
        "reports": [dict(asdict(rep), status=status) for rep, status in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def conjecture_to_csv(rows: list[ConjectureRow]) -> str:
    lines = [CONJECTURE_HEADER]
    lines += [
        ",".join((str(r.k), str(r.order), repr(r.energy), repr(r.ratio)))
        for r in rows
    ]
    return "\n".join(lines) + "\n"


def write_report(outcome: VerifyOutcome, path: str | Path, fmt: str = "csv") -> Path:
    """Persist a sweep outcome; raises OSError annotated with the path."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    text = outcome_to_csv(outcome) if fmt == "csv" else outcome_to_json(outcome)
    return _write(path, text)


def write_conjecture_table(rows: list[ConjectureRow], path: str | Path) -> Path:
    return _write(path, conjecture_to_csv(rows))


def _write(path: str | Path, text: str) -> Path:
    path = Path(path)
    try:
        path.write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
    return path


def parse_report_json(text: str) -> VerifyOutcome:
    """Rebuild a VerifyOutcome from its JSON form (wall time not stored)."""
    from .sweeps import OrderStat

    data = json.loads(text)
    return VerifyOutcome(
        sweep=data["sweep"],
        total=data["total"],
        counterexamples=tuple(EnergyReport(**r) for r in data["counterexamples"]),
        borderline=tuple(EnergyReport(**r) for r in data["borderline"]),
        order_stats=tuple(OrderStat(**s) for s in data["order_stats"]),
        wall_time=0.0,
    )
