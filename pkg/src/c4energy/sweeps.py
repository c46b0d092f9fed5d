"""Reproduction sweeps: exhaustive energy-vs-order checks over bounded-
degree trees and small connected C4-free graphs, plus the hub-of-three-
binary-trees ratio table.

Each sweep classifies every graph's energy against its order with a strict
margin.  Anything landing within the margin of the boundary is recomputed
in extended precision before classification, so floating-point noise can
neither fabricate nor hide an exception; a true equality (K_2 has energy
exactly 2) classifies as satisfying the non-strict bound.

Tree sweeps shard their level-sequence stream into chunks consumed by a
worker pool; chunk results are folded back in stream order, so reports are
identical for any worker count.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Iterator

from .bounds import theorem1_verdict
from .constructions import b_tree, exceptional_trees
from .eigensolver import residual_bound
from .enumeration import (
    EnumConfig,
    connected_c4free_graphs,
    free_tree_sequences,
    level_sequence_to_graph,
)
from .graphs import CANONICAL_CAP, Graph, canonical_code, write_graph6
from .spectra import TOLERANCE, EnergyReport, energy, spectrum

CONJECTURE_MAX_K = 9
THEOREM2_MAX_ORDER = 10
_CHUNK = 512


@dataclass(frozen=True)
class OrderStat:
    """Per-order aggregate: how many graphs were examined and the smallest
    energy-minus-order margin seen."""

    order: int
    graphs: int
    min_margin: float


@dataclass(frozen=True)
class VerifyOutcome:
    """Result of one sweep: everything needed to re-derive its claim."""

    sweep: str
    total: int
    counterexamples: tuple[EnergyReport, ...]
    borderline: tuple[EnergyReport, ...]
    order_stats: tuple[OrderStat, ...]
    wall_time: float


@dataclass(frozen=True)
class ConjectureRow:
    """One row of the energy-ratio table for the hub-joined binary trees."""

    k: int
    order: int
    energy: float
    ratio: float


@dataclass(frozen=True)
class RunConfig:
    """CLI-facing sweep parameters."""

    max_order: int
    jobs: int = 1
    out: str | None = None
    fmt: str = "csv"
    tol: float = TOLERANCE

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError(f"worker count must be >= 1, got {self.jobs}")


def graph_key(g: Graph) -> str:
    """Report identifier: canonical graph6 up to the canonicalization cap,
    the as-generated graph6 beyond it."""
    if g.n <= CANONICAL_CAP:
        from .graphs import code_to_graph

        return write_graph6(code_to_graph(canonical_code(g)))
    return write_graph6(g)


def classify_energy_vs_order(g: Graph, tol: float = TOLERANCE) -> tuple[float, str]:
    """Energy of ``g`` and its certified relation to the order: "above",
    "below", or "equal" when even extended precision cannot separate the
    two (a true equality, like the single edge with energy 2)."""
    e = energy(g)
    margin = e - g.n
    if margin > tol:
        return e, "above"
    if margin < -tol:
        return e, "below"
    refined = energy(g, extended=True) - g.n
    cert = g.n * residual_bound(g.n, g.max_degree(), extended=True)
    if refined > cert:
        return e, "above"
    if refined < -cert:
        return e, "below"
    return e, "equal"


def _report(g: Graph, e: float, mu1: float) -> EnergyReport:
    return EnergyReport(
        key=graph_key(g), n=g.n, m=g.m, energy=e, mu1=mu1, deficit=e - g.n
    )


# -- tree sweeps -------------------------------------------------------------


def _tree_chunk_worker(task) -> tuple[int, float, list]:
    """Classify one chunk of level sequences; returns (count, min margin,
    flagged reports) where flagged is a list of (kind, report) pairs."""
    n, chunk, tol, skip = task
    count = 0
    min_margin = math.inf
    flagged = []
    for levels in chunk:
        if levels in skip:
            continue
        g = level_sequence_to_graph(levels)
        e, relation = classify_energy_vs_order(g, tol)
        count += 1
        margin = e - n
        if margin < min_margin:
            min_margin = margin
        if relation == "below":
            # certified E < n; an equality resolves as satisfying E >= n
            flagged.append(("exception", _report(g, e, spectrum(g).mu1)))
    return count, min_margin, flagged


def _chunked_sequences(n: int, dmax: int, tol: float, skip) -> Iterator[tuple]:
    chunk: list[tuple[int, ...]] = []
    for levels in free_tree_sequences(n, dmax):
        chunk.append(levels)
        if len(chunk) == _CHUNK:
            yield (n, chunk, tol, skip)
            chunk = []
    if chunk:
        yield (n, chunk, tol, skip)


def _run_tree_sweep(
    name: str,
    max_order: int,
    jobs: int,
    tol: float,
    skip_codes: frozenset[bytes],
) -> VerifyOutcome:
    start = time.perf_counter()
    counterexamples: list[EnergyReport] = []
    borderline: list[EnergyReport] = []
    stats: list[OrderStat] = []
    pool = None
    try:
        if jobs > 1:
            pool = get_context("fork").Pool(jobs)
        for n in range(1, max_order + 1):
            skip = _skip_sequences(n, skip_codes)
            tasks = _chunked_sequences(n, 3, tol, skip)
            if pool is None:
                results = map(_tree_chunk_worker, tasks)
            else:
                results = pool.imap(_tree_chunk_worker, tasks)
            count = 0
            min_margin = math.inf
            for c, mm, flagged in results:
                count += c
                if mm < min_margin:
                    min_margin = mm
                for kind, rep in flagged:
                    (counterexamples if kind == "exception" else borderline).append(rep)
            if count:
                stats.append(OrderStat(order=n, graphs=count, min_margin=min_margin))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    total = sum(s.graphs for s in stats)
    _sort_reports(counterexamples)
    _sort_reports(borderline)
    return VerifyOutcome(
        sweep=name,
        total=total,
        counterexamples=tuple(counterexamples),
        borderline=tuple(borderline),
        order_stats=tuple(stats),
        wall_time=time.perf_counter() - start,
    )


def _sort_reports(reports: list[EnergyReport]) -> None:
    reports.sort(key=lambda r: (r.n, r.key))


def exceptional_codes() -> frozenset[bytes]:
    return frozenset(canonical_code(t) for t in exceptional_trees())


def _skip_sequences(n: int, skip_codes: frozenset[bytes]) -> frozenset:
    """Level sequences (as generated) of the skip set at this order; the
    generator emits one representative per class, so matching by canonical
    code once up front lets workers skip by plain tuple equality."""
    if not skip_codes or n > CANONICAL_CAP:
        return frozenset()
    if n not in {code[0] for code in skip_codes}:
        return frozenset()
    out = []
    for levels in free_tree_sequences(n, 3):
        g = level_sequence_to_graph(levels)
        if canonical_code(g) in skip_codes:
            out.append(levels)
    return frozenset(out)


def fact1_sweep(max_order: int, jobs: int = 1, tol: float = TOLERANCE) -> VerifyOutcome:
    """Every tree with max degree <= 3 up to ``max_order``; reports each
    tree whose energy is certified below its order."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    return _run_tree_sweep("fact1", max_order, jobs, tol, frozenset())


def theorem3_sweep(max_order: int, jobs: int = 1, tol: float = TOLERANCE) -> VerifyOutcome:
    """Same stream as the exception hunt, but with the four known
    low-energy trees excluded; any reported tree is a counterexample to
    the energy >= order claim."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    return _run_tree_sweep("thm3", max_order, jobs, tol, exceptional_codes())


# -- graph sweeps ------------------------------------------------------------


def theorem2_sweep(max_order: int, jobs: int = 1, tol: float = TOLERANCE) -> VerifyOutcome:
    """All connected C4-free graphs with max degree <= 3 and at least as
    many edges as vertices, up to ``max_order``; each must have energy
    strictly above its order."""
    if not 1 <= max_order <= THEOREM2_MAX_ORDER:
        raise ValueError(f"max_order must be in [1, {THEOREM2_MAX_ORDER}]")
    start = time.perf_counter()
    counterexamples: list[EnergyReport] = []
    borderline: list[EnergyReport] = []
    stats: list[OrderStat] = []
    for n in range(1, max_order + 1):
        count = 0
        min_margin = math.inf
        for g in connected_c4free_graphs(EnumConfig(n=n, dmax=3, min_edges=max(n, 1))):
            e, relation = classify_energy_vs_order(g, tol)
            count += 1
            if e - n < min_margin:
                min_margin = e - n
            if relation == "below":
                counterexamples.append(_report(g, e, spectrum(g).mu1))
            elif relation == "equal":
                # strict inequality claimed; an equality cannot pass
                borderline.append(_report(g, e, spectrum(g).mu1))
        if count:
            stats.append(OrderStat(order=n, graphs=count, min_margin=min_margin))
    _sort_reports(counterexamples)
    _sort_reports(borderline)
    return VerifyOutcome(
        sweep="thm2",
        total=sum(s.graphs for s in stats),
        counterexamples=tuple(counterexamples),
        borderline=tuple(borderline),
        order_stats=tuple(stats),
        wall_time=time.perf_counter() - start,
    )


def theorem1_sweep(
    max_order: int, d: int, jobs: int = 1, tol: float = TOLERANCE
) -> VerifyOutcome:
    """All connected C4-free graphs with max degree <= d whose edge count
    clears the density threshold; hypotheses holding must force energy
    strictly above order."""
    if not 1 <= max_order <= THEOREM2_MAX_ORDER:
        raise ValueError(f"max_order must be in [1, {THEOREM2_MAX_ORDER}]")
    start = time.perf_counter()
    counterexamples: list[EnergyReport] = []
    borderline: list[EnergyReport] = []
    stats: list[OrderStat] = []
    for n in range(1, max_order + 1):
        count = 0
        min_margin = math.inf
        for g in connected_c4free_graphs(EnumConfig(n=n, dmax=d, min_edges=0)):
            verdict = theorem1_verdict(g, d, tol)
            if not verdict.hypotheses_hold:
                continue
            count += 1
            if verdict.margin < min_margin:
                min_margin = verdict.margin
            if verdict.conclusion_holds:
                continue
            e, relation = classify_energy_vs_order(g, tol)
            if relation == "above":
                continue
            if relation == "below":
                counterexamples.append(_report(g, e, spectrum(g).mu1))
            else:
                borderline.append(_report(g, e, spectrum(g).mu1))
        if count:
            stats.append(OrderStat(order=n, graphs=count, min_margin=min_margin))
    _sort_reports(counterexamples)
    _sort_reports(borderline)
    return VerifyOutcome(
        sweep=f"thm1-d{d}",
        total=sum(s.graphs for s in stats),
        counterexamples=tuple(counterexamples),
        borderline=tuple(borderline),
        order_stats=tuple(stats),
        wall_time=time.perf_counter() - start,
    )


# -- conjecture table --------------------------------------------------------


def conjecture_table(max_k: int) -> list[ConjectureRow]:
    """Energy and energy/order ratio of the hub-joined triple binary tree
    for k = 0..max_k; the table is evidence about the limiting ratio, it
    asserts nothing."""
    if not 0 <= max_k <= CONJECTURE_MAX_K:
        raise ValueError(f"max_k must be in [0, {CONJECTURE_MAX_K}]")
    rows = []
    for k in range(max_k + 1):
        g = b_tree(k)
        e = energy(g)
        rows.append(ConjectureRow(k=k, order=g.n, energy=e, ratio=e / g.n))
    return rows
