"""Exhaustive verification sweeps over small connected graphs.

The built-in source walks every labelled graph on ``n`` vertices by edge
mask (compiled kernel, ``n <= 8``); the alternative source is a graph6 file.
Work is split into disjoint chunks, each chunk produces a
:class:`PartialReport`, and partial reports merge by addition plus
"smallest ``K`` graph6 strings" witness selection, so the final report does
not depend on how chunks were scheduled.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import multiprocessing as mp
import os
import sys
import time
import zlib
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import combinations
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from ._kernel import COL, KERNEL_MAX_N, scan_masks
from .batch import evaluate, predicates, table_from_graphs
from .bounds import CATALOGUE, BoundId
from .graph import Graph, GraphError, from_edge_list, from_mask, is_connected, pair_count, parse_graph6, to_mask
from .invariants import IDENTITY_CHECKS
from .oracle import naive_xi_c

log = logging.getLogger(__name__)

BUILTIN_MAX_N = KERNEL_MAX_N
DEFAULT_MAX_N = 7
CHUNK_MASKS = 1 << 17
CHUNK_GRAPHS = 2048
DEFAULT_WITNESS_CAP = 10
ORACLE_RATE = 100  # one graph in ORACLE_RATE is recomputed naively
WORKERS_ENV = "ECC_BOUNDS_WORKERS"

WITNESS_KINDS = ("violations", "equalities", "agreement_failures", "missed", "unpredicted", "alt_agreement_failures")


class SweepError(ValueError):
    pass


class StreamParseError(SweepError):
    def __init__(self, message: str, lineno: int):
        super().__init__(message)
        self.lineno = lineno


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise SweepError(f"{WORKERS_ENV} must be a positive integer, got {env!r}") from None
        if value < 1:
            raise SweepError(f"{WORKERS_ENV} must be a positive integer, got {env!r}")
        return value
    return os.cpu_count() or 1


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 2
    n_max: int = DEFAULT_MAX_N
    bounds: tuple[BoundId, ...] = tuple(BoundId)
    include_nordhaus_gaddum: bool = True
    # None means the built-in enumeration; otherwise a graph6 file path ('-' = stdin)
    source: str | None = None
    worker_count: int = 1
    witness_cap: int = DEFAULT_WITNESS_CAP
    allow_large: bool = False
    oracle_rate: int = ORACLE_RATE

    def validate(self) -> None:
        if self.worker_count < 1:
            raise SweepError("worker_count must be positive")
        if self.witness_cap < 0:
            raise SweepError("witness_cap must be nonnegative")
        if self.oracle_rate < 1:
            raise SweepError("oracle_rate must be positive")
        if self.source is None:
            if not 2 <= self.n_min <= self.n_max:
                raise SweepError(f"need 2 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
            if self.n_max > BUILTIN_MAX_N:
                raise SweepError(f"built-in enumeration stops at n={BUILTIN_MAX_N}")
            if self.n_max > DEFAULT_MAX_N and not self.allow_large:
                raise SweepError(
                    f"n_max={self.n_max} enumerates 2^{pair_count(self.n_max)} masks; pass allow_large to confirm"
                )

    @property
    def bound_ids(self) -> tuple[BoundId, ...]:
        ids = tuple(BoundId(b) for b in self.bounds)
        if not self.include_nordhaus_gaddum:
            ids = tuple(b for b in ids if b is not BoundId.T12_NG)
        return tuple(b for b in BoundId if b in ids)

    def to_dict(self) -> dict[str, Any]:
        return {
            # the path is left out so a file and the same bytes on stdin report identically
            "source": "builtin" if self.source is None else "graph6",
            "n_min": self.n_min,
            "n_max": self.n_max,
            "bounds": [b.value for b in self.bound_ids],
            "include_nordhaus_gaddum": self.include_nordhaus_gaddum,
            "witness_cap": self.witness_cap,
            "oracle_rate": self.oracle_rate,
        }


# -- graph sources ---------------------------------------------------------------


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on ``n`` vertices, by ascending edge mask."""
    if not 1 <= n <= BUILTIN_MAX_N:
        raise SweepError(f"n must be in 1..{BUILTIN_MAX_N}, got {n}")
    total = 1 << pair_count(n)
    for lo in range(0, total, CHUNK_MASKS):
        rows = scan_masks(n, lo, min(total, lo + CHUNK_MASKS), with_complement=False)
        for mask in rows[:, COL["mask"]]:
            yield from_mask(n, int(mask))


class Graph6Stream:
    """Iterate the connected graphs of a graph6 file, counting skipped ones."""

    def __init__(self, path: str):
        self.path = path
        self.skipped_disconnected = 0

    def _lines(self) -> Iterator[str]:
        if self.path == "-":
            yield from sys.stdin
            return
        try:
            fh = open(self.path, encoding="ascii")
        except OSError as exc:
            raise SweepError(f"cannot read {self.path}: {exc.strerror}") from None
        with fh:
            yield from fh

    def __iter__(self) -> Iterator[Graph]:
        for lineno, line in enumerate(self._lines(), start=1):
            text = line.strip()
            if not text:
                continue
            try:
                g = parse_graph6(text)
            except GraphError as exc:
                raise StreamParseError(f"{self.path}:{lineno}: {exc}", lineno) from None
            if not is_connected(g):
                self.skipped_disconnected += 1
                log.warning("%s:%d: skipping disconnected graph %s", self.path, lineno, text)
                continue
            yield g


def read_graph6_stream(path: str) -> Graph6Stream:
    return Graph6Stream(path)


@lru_cache(maxsize=None)
def named_graphs(n: int) -> dict[int, str]:
    """Edge masks of the canonical family members on ``n`` vertices."""
    named: dict[int, list[str]] = {}

    def add(name: str, edges: Iterable[tuple[int, int]]) -> None:
        g = from_edge_list(n, list(edges))
        if is_connected(g):
            named.setdefault(to_mask(g), []).append(name)

    add(f"K_{n}", combinations(range(n), 2))
    add(f"P_{n}", [(i, i + 1) for i in range(n - 1)])
    if n >= 2:
        add(f"S_{n}", [(0, i) for i in range(1, n)])
    if n >= 3:
        add(f"C_{n}", [(i, (i + 1) % n) for i in range(n)])
        for j in range(1, n // 2 + 1):
            removed = {(2 * i, 2 * i + 1) for i in range(j)}
            add(f"K_{n}-{j}e", [e for e in combinations(range(n), 2) if e not in removed])
    return {mask: "=".join(names) for mask, names in named.items()}


# -- tallies -----------------------------------------------------------------------


def _merge_witnesses(a: list[str], b: list[str], cap: int) -> list[str]:
    return sorted(set(a) | set(b))[:cap]


@dataclass
class BoundTally:
    graphs_checked: int = 0
    inapplicable: int = 0
    holds: int = 0
    violations: int = 0
    equality_count: int = 0
    negative_radicand: int = 0
    predicted_count: int = 0
    agreement_failures: int = 0
    missed: int = 0
    unpredicted: int = 0
    alt_predicted_count: int = 0
    alt_agreement_failures: int = 0
    census: dict[str, list[int]] = field(default_factory=dict)
    witnesses: dict[str, list[str]] = field(default_factory=lambda: {k: [] for k in WITNESS_KINDS})
    named: dict[str, list[str]] = field(default_factory=lambda: {"violations": [], "equalities": [], "agreement_failures": []})

    _COUNTS = (
        "graphs_checked", "inapplicable", "holds", "violations", "equality_count",
        "negative_radicand", "predicted_count", "agreement_failures", "missed",
        "unpredicted", "alt_predicted_count", "alt_agreement_failures",
    )

    def merge(self, other: BoundTally, cap: int) -> BoundTally:
        out = BoundTally()
        for name in self._COUNTS:
            setattr(out, name, getattr(self, name) + getattr(other, name))
        for key in set(self.census) | set(other.census):
            a = self.census.get(key, [0, 0])
            b = other.census.get(key, [0, 0])
            out.census[key] = [a[0] + b[0], a[1] + b[1]]
        for kind in WITNESS_KINDS:
            out.witnesses[kind] = _merge_witnesses(self.witnesses[kind], other.witnesses[kind], cap)
        for kind in out.named:
            out.named[kind] = _sort_names(set(self.named[kind]) | set(other.named[kind]))
        return out


def _sort_names(names: Iterable[str]) -> list[str]:
    def key(name: str) -> tuple[int, str]:
        head = name.split("=")[0]
        digits = "".join(ch for ch in head.split("_", 1)[1].split("-")[0] if ch.isdigit())
        return int(digits or 0), name

    return sorted(names, key=key)


@dataclass
class PartialReport:
    bounds: dict[str, BoundTally] = field(default_factory=dict)
    graphs_per_n: Counter = field(default_factory=Counter)
    identity_failures: dict[str, int] = field(default_factory=dict)
    identity_witnesses: dict[str, list[str]] = field(default_factory=dict)
    oracle_sampled: int = 0
    oracle_mismatches: int = 0
    oracle_witnesses: list[str] = field(default_factory=list)

    def merge(self, other: PartialReport, cap: int) -> PartialReport:
        out = PartialReport()
        for key in set(self.bounds) | set(other.bounds):
            a, b = self.bounds.get(key), other.bounds.get(key)
            out.bounds[key] = a.merge(b, cap) if a and b else (a or b)  # type: ignore[assignment]
        out.graphs_per_n = self.graphs_per_n + other.graphs_per_n
        for key in set(self.identity_failures) | set(other.identity_failures):
            out.identity_failures[key] = self.identity_failures.get(key, 0) + other.identity_failures.get(key, 0)
            out.identity_witnesses[key] = _merge_witnesses(
                self.identity_witnesses.get(key, []), other.identity_witnesses.get(key, []), cap
            )
        out.oracle_sampled = self.oracle_sampled + other.oracle_sampled
        out.oracle_mismatches = self.oracle_mismatches + other.oracle_mismatches
        out.oracle_witnesses = _merge_witnesses(self.oracle_witnesses, other.oracle_witnesses, cap)
        return out


class _Labels:
    """graph6 strings for table rows, computed on demand for mask-indexed rows."""

    def __init__(self, table: np.ndarray, labels: Sequence[str] | None):
        self.table = table
        self.labels = labels
        # mask-ordered chunks are already in graph6 order
        self.ordered = labels is None

    def __getitem__(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        row = self.table[i]
        return from_mask(int(row[COL["n"]]), int(row[COL["mask"]])).to_graph6()

    def graph(self, i: int) -> Graph:
        if self.labels is not None:
            return parse_graph6(self.labels[i])
        row = self.table[i]
        return from_mask(int(row[COL["n"]]), int(row[COL["mask"]]))

    def smallest(self, flags: np.ndarray, cap: int) -> list[str]:
        idx = np.flatnonzero(flags)
        if self.ordered:
            return [self[int(i)] for i in idx[:cap]]
        return sorted(self[int(i)] for i in idx)[:cap]


def _named_rows(table: np.ndarray) -> dict[int, str]:
    out: dict[int, str] = {}
    if len(table) == 0:
        return out
    ns = table[:, COL["n"]]
    masks = table[:, COL["mask"]]
    for n in np.unique(ns):
        n = int(n)
        if n > BUILTIN_MAX_N:
            continue
        lookup = named_graphs(n)
        keys = np.fromiter(lookup, dtype=np.int64, count=len(lookup))
        hits = np.flatnonzero((ns == n) & np.isin(masks.astype(np.int64), keys))
        for i in hits:
            out[int(i)] = lookup[int(masks[i])]
    return out


def _oracle_rows(table: np.ndarray, labels: Sequence[str] | None, rate: int) -> np.ndarray:
    if labels is not None:
        return np.array([zlib.crc32(s.encode()) % rate == 0 for s in labels], dtype=bool)
    masks = table[:, COL["mask"]].astype(np.int64)
    return ((masks * 2654435761) & 0xFFFFFFFF) % rate == 0


def tally_table(
    table: np.ndarray,
    ids: Sequence[BoundId],
    cap: int,
    labels: Sequence[str] | None = None,
    oracle_rate: int = ORACLE_RATE,
) -> PartialReport:
    """Evaluate ``ids`` on every row and summarise into a partial report."""
    part = PartialReport()
    lab = _Labels(table, labels)
    k = len(table)
    for n, count in zip(*np.unique(table[:, COL["n"]], return_counts=True)):
        part.graphs_per_n[int(n)] += int(count)
    if k == 0:
        return part
    preds = predicates(table)
    named = _named_rows(table)
    results = evaluate(table, ids)
    for bid in ids:
        res = results[bid]
        spec = CATALOGUE[bid]
        app = res.applicable
        eq = app & res.equal
        viol = app & ~res.holds
        t = BoundTally(
            graphs_checked=k,
            inapplicable=int((~app).sum()),
            holds=int((app & res.holds).sum()),
            violations=int(viol.sum()),
            equality_count=int(eq.sum()),
        )
        flags = {"violations": viol, "equalities": eq}
        if res.negative_radicand is not None:
            t.negative_radicand = int((app & res.negative_radicand).sum())
        if res.predicted is not None:
            pred = app & res.predicted
            missed = pred & ~eq
            unpred = eq & ~res.predicted
            t.predicted_count = int(pred.sum())
            t.missed = int(missed.sum())
            t.unpredicted = int(unpred.sum())
            t.agreement_failures = t.missed + t.unpredicted
            flags.update(missed=missed, unpredicted=unpred, agreement_failures=missed | unpred)
            conds = [(p.value, app & preds[p]) for p in spec.condition or ()]
            if bid is BoundId.T12_NG:
                conds = [("ALL_ECC_TWO(G and complement)", pred)]
            conds += [(p.value, app & preds[p]) for p in spec.alt_condition or ()]
            for name, sat in conds:
                t.census[name] = [int(sat.sum()), int((sat & eq).sum())]
        if res.alt_predicted is not None:
            alt = app & res.alt_predicted
            alt_bad = alt ^ eq
            t.alt_predicted_count = int(alt.sum())
            t.alt_agreement_failures = int(alt_bad.sum())
            flags["alt_agreement_failures"] = alt_bad
        for kind, f in flags.items():
            t.witnesses[kind] = lab.smallest(f, cap)
        for i, name in named.items():
            if viol[i]:
                t.named["violations"].append(name)
            if eq[i]:
                t.named["equalities"].append(name)
            if "agreement_failures" in flags and flags["agreement_failures"][i]:
                t.named["agreement_failures"].append(name)
        for kind in t.named:
            t.named[kind] = _sort_names(t.named[kind])
        part.bounds[bid.value] = t

    ident = table[:, COL["ident"]].astype(np.int64)
    for bit, name in enumerate(IDENTITY_CHECKS):
        bad = (ident >> bit) & 1 == 1
        part.identity_failures[name] = int(bad.sum())
        part.identity_witnesses[name] = lab.smallest(bad, cap)

    sample = np.flatnonzero(_oracle_rows(table, labels, oracle_rate))
    part.oracle_sampled = len(sample)
    bad_oracle = []
    for i in sample:
        if naive_xi_c(lab.graph(int(i))) != table[i, COL["xi_c"]]:
            bad_oracle.append(lab[int(i)])
    part.oracle_mismatches = len(bad_oracle)
    part.oracle_witnesses = sorted(bad_oracle)[:cap]
    return part


# -- orchestration -------------------------------------------------------------------


def _run_task(task: tuple) -> PartialReport:
    kind, cfg = task[0], task[1]
    with_co = BoundId.T12_NG in cfg.bound_ids
    if kind == "masks":
        _, _, n, lo, hi = task
        table = scan_masks(n, lo, hi, with_complement=with_co)
        return tally_table(table, cfg.bound_ids, cfg.witness_cap, None, cfg.oracle_rate)
    _, _, labels = task
    graphs = [parse_graph6(s) for s in labels]
    table = table_from_graphs(graphs, with_complement=with_co)
    return tally_table(table, cfg.bound_ids, cfg.witness_cap, labels, cfg.oracle_rate)


def _tasks(cfg: SweepConfig, stream: Graph6Stream | None) -> Iterator[tuple]:
    if stream is None:
        for n in range(cfg.n_min, cfg.n_max + 1):
            total = 1 << pair_count(n)
            for lo in range(0, total, CHUNK_MASKS):
                yield ("masks", cfg, n, lo, min(total, lo + CHUNK_MASKS))
        return
    batch: list[str] = []
    for g in stream:
        batch.append(g.to_graph6())
        if len(batch) == CHUNK_GRAPHS:
            yield ("graphs", cfg, batch)
            batch = []
    if batch:
        yield ("graphs", cfg, batch)


@dataclass
class VerificationReport:
    config: SweepConfig
    result: PartialReport
    elapsed: float
    skipped_disconnected: int = 0

    @property
    def total_graphs(self) -> int:
        return sum(self.result.graphs_per_n.values())

    @property
    def asserted_violations(self) -> int:
        return sum(
            t.violations for key, t in self.result.bounds.items() if CATALOGUE[BoundId(key)].asserted
        )

    @property
    def ok(self) -> bool:
        return (
            self.asserted_violations == 0
            and not any(self.result.identity_failures.values())
            and self.result.oracle_mismatches == 0
        )

    def bound(self, bid: BoundId | str) -> BoundTally:
        return self.result.bounds[BoundId(bid).value]

    def to_dict(self, include_runtime: bool = True) -> dict[str, Any]:
        r = self.result
        bounds = {}
        for bid in self.config.bound_ids:
            t = r.bounds.get(bid.value)
            if t is None:
                continue
            spec = CATALOGUE[bid]
            entry = {
                "formula": spec.formula,
                "asserted": spec.asserted,
                "graphs_checked": t.graphs_checked,
                "holds": t.holds,
                "violations": t.violations,
                "inapplicable": t.inapplicable,
                "violation_witnesses": t.witnesses["violations"],
                "equality_count": t.equality_count,
                "equality_witnesses": t.witnesses["equalities"],
                "equality_condition": None if spec.condition is None else [p.value for p in spec.condition],
            }
            if spec.form == "squared":
                entry["negative_radicand"] = t.negative_radicand
            if spec.condition is not None:
                entry.update(
                    predicted_count=t.predicted_count,
                    agreement_failures=t.agreement_failures,
                    agreement_failure_witnesses=t.witnesses["agreement_failures"],
                    predicted_without_equality=t.missed,
                    predicted_without_equality_witnesses=t.witnesses["missed"],
                    equality_without_prediction=t.unpredicted,
                    equality_without_prediction_witnesses=t.witnesses["unpredicted"],
                    census={k: {"satisfying": v[0], "with_equality": v[1]} for k, v in sorted(t.census.items())},
                )
            if spec.alt_condition is not None:
                entry.update(
                    alt_equality_condition=[p.value for p in spec.alt_condition],
                    alt_predicted_count=t.alt_predicted_count,
                    alt_agreement_failures=t.alt_agreement_failures,
                    alt_agreement_failure_witnesses=t.witnesses["alt_agreement_failures"],
                )
            if not spec.asserted:
                entry["status_note"] = "printed form; violations are expected and informational"
            entry["named"] = t.named
            bounds[bid.value] = entry
        out: dict[str, Any] = {
            "config": self.config.to_dict(),
            "summary": {
                "total_graphs": self.total_graphs,
                "graphs_per_n": {str(n): c for n, c in sorted(r.graphs_per_n.items())},
                "skipped_disconnected": self.skipped_disconnected,
                "asserted_violations": self.asserted_violations,
                "informational_violations": sum(
                    t.violations for k, t in r.bounds.items() if not CATALOGUE[BoundId(k)].asserted
                ),
                "ok": self.ok,
            },
            "bounds": bounds,
            "identities": {
                "checked": self.total_graphs,
                "failures": {k: r.identity_failures.get(k, 0) for k in IDENTITY_CHECKS},
                "failure_witnesses": {
                    k: r.identity_witnesses[k] for k in IDENTITY_CHECKS if r.identity_witnesses.get(k)
                },
            },
            "oracle": {
                "sampled": r.oracle_sampled,
                "mismatches": r.oracle_mismatches,
                "witnesses": r.oracle_witnesses,
            },
        }
        if include_runtime:
            out["runtime"] = {"elapsed_seconds": round(self.elapsed, 3), "workers": self.config.worker_count}
        return out

    def to_json(self, include_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(include_runtime), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([
            "id", "asserted", "graphs_checked", "holds", "violations", "inapplicable",
            "equality_count", "predicted_count", "agreement_failures", "first_violation", "first_equality",
        ])
        for bid in self.config.bound_ids:
            t = self.result.bounds.get(bid.value)
            if t is None:
                continue
            w.writerow([
                bid.value, CATALOGUE[bid].asserted, t.graphs_checked, t.holds, t.violations,
                t.inapplicable, t.equality_count, t.predicted_count, t.agreement_failures,
                next(iter(t.witnesses["violations"]), ""), next(iter(t.witnesses["equalities"]), ""),
            ])
        return buf.getvalue()


def sweep(cfg: SweepConfig) -> VerificationReport:
    """Run every selected bound over the configured graph source."""
    cfg.validate()
    start = time.perf_counter()
    stream = None if cfg.source is None else read_graph6_stream(cfg.source)
    tasks = _tasks(cfg, stream)
    if cfg.worker_count == 1:
        parts: Iterable[PartialReport] = map(_run_task, tasks)
        merged = reduce(lambda a, b: a.merge(b, cfg.witness_cap), parts, PartialReport())
    else:
        ctx = mp.get_context("fork")
        with ctx.Pool(cfg.worker_count) as pool:
            parts = pool.imap_unordered(_run_task, tasks)
            merged = reduce(lambda a, b: a.merge(b, cfg.witness_cap), parts, PartialReport())
    elapsed = time.perf_counter() - start
    return VerificationReport(
        cfg, merged, elapsed, 0 if stream is None else stream.skipped_disconnected
    )
