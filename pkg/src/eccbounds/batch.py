"""Vectorised bound evaluation over tables of invariants.

The sweep evaluates every bound on hundreds of thousands of graphs at a
time, so the formulas of :mod:`eccbounds.bounds` are restated here as
cross-multiplied integer comparisons over numpy columns.  Tables of graphs
with ``n <= 10`` fit int64 comfortably; larger graphs use ``dtype=object``
columns (exact Python integers).  ``tests/test_batch.py`` checks this module
row-for-row against the per-graph evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable

import numpy as np

from ._kernel import COL, COLUMNS
from .bounds import CATALOGUE, BoundId, Pred
from .graph import Graph, complement, is_connected, to_mask
from .invariants import InvariantSet, compute_all, identity_failures

INT64_MAX_N = 10


@dataclass
class BatchResult:
    applicable: np.ndarray
    holds: np.ndarray
    equal: np.ndarray
    predicted: np.ndarray | None
    alt_predicted: np.ndarray | None
    negative_radicand: np.ndarray | None = None


def table_from_graphs(graphs: Iterable[Graph], with_complement: bool = True) -> np.ndarray:
    """Build a kernel-compatible table with the reference invariant code.

    Column ``mask`` holds the edge mask for ``n <= 8`` and ``-1`` otherwise.
    """
    rows = []
    for g in graphs:
        inv = compute_all(g)
        row = _row(g, inv)
        if with_complement and g.n >= 4:
            cg = complement(g)
            if is_connected(cg):
                cinv = compute_all(cg)
                row[COL["co_ok"]] = 1
                row[COL["co_xi_c"]] = cinv.xi_c
                row[COL["co_M1"]] = cinv.M1
                row[COL["co_r"]] = cinv.r
                row[COL["co_d"]] = cinv.d
        rows.append(row)
    if not rows:
        return np.zeros((0, len(COLUMNS)), dtype=np.int64)
    small = max(r[COL["n"]] for r in rows) <= INT64_MAX_N
    return np.array(rows, dtype=np.int64 if small else object)


def _row(g: Graph, inv: InvariantSet) -> list[int]:
    # common denominator keeps H integral in int64 tables
    den = lcm(*range(1, g.n)) if g.n > 1 else 1
    if g.n > INT64_MAX_N:
        den = inv.H.denominator
    row = [0] * len(COLUMNS)
    vals = {
        "mask": to_mask(g) if g.n <= 8 else -1,
        "n": g.n, "m": inv.m, "Delta": inv.Delta, "delta": inv.delta,
        "r": inv.r, "d": inv.d, "theta": inv.theta, "M1": inv.M1, "M2": inv.M2,
        "E1": inv.E1, "E2": inv.E2, "W": inv.W,
        "H_num": int(inv.H * den), "H_den": den,
        "xi_c": inv.xi_c, "xi_cc": inv.xi_cc,
        "ident": identity_failures(g, inv),
    }
    for k, v in vals.items():
        row[COL[k]] = v
    return row


def predicates(t: np.ndarray) -> dict[Pred, np.ndarray]:
    c = {name: t[:, i] for name, i in COL.items()}
    n, m = c["n"], c["m"]
    D, dl, r, d = c["Delta"], c["delta"], c["r"], c["d"]
    complete = 2 * m == n * (n - 1)
    regular = D == dl
    self_centered = r == d
    return {
        Pred.REGULAR: regular,
        Pred.SELF_CENTERED: self_centered,
        Pred.REGULAR_AND_SELF_CENTERED: regular & self_centered,
        Pred.COMPLETE: complete,
        Pred.STAR: (n >= 2) & (m == n - 1) & (D == n - 1),
        Pred.PATH: (n <= 2) | ((m == n - 1) & (D <= 2)),
        Pred.P2: n == 2,
        Pred.P3: (n == 3) & (m == 2),
        Pred.COMPLETE_MINUS_MATCHING: (dl >= n - 2) & ~complete & (n >= 2),
        Pred.ALL_ECC_TWO: (r == 2) & (d == 2),
    }


def _power_ge(xi, D, dl, xcc) -> tuple[np.ndarray, np.ndarray]:
    """Exact ``xi**D >= dl**dl * xcc**D`` (and equality), filtered through logs."""
    k = len(xi)
    ge = np.zeros(k, dtype=bool)
    eq = np.zeros(k, dtype=bool)
    if k == 0:
        return ge, eq
    xf = np.asarray(xi, dtype=float)
    Df = np.asarray(D, dtype=float)
    lf = np.asarray(dl, dtype=float)
    cf = np.asarray(xcc, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        a = Df * np.log(xf)
        b = lf * np.log(lf) + Df * np.log(cf)
    gap = a - b
    decided = np.isfinite(gap) & (np.abs(gap) > 1e-9 * np.maximum(1.0, np.abs(a)))
    ge[decided] = gap[decided] > 0
    for i in np.flatnonzero(~decided):
        lhs = int(xi[i]) ** int(D[i])
        rhs = int(dl[i]) ** int(dl[i]) * int(xcc[i]) ** int(D[i])
        ge[i] = lhs >= rhs
        eq[i] = lhs == rhs
    return ge, eq


def evaluate(t: np.ndarray, ids: Iterable[BoundId] | None = None) -> dict[BoundId, BatchResult]:
    """Evaluate the selected bounds on every row of ``t``."""
    ids = list(BoundId) if ids is None else [BoundId(b) for b in ids]
    c = {name: t[:, i] for name, i in COL.items()}
    n, m, r, d = c["n"], c["m"], c["r"], c["d"]
    D, dl = c["Delta"], c["delta"]
    M1, M2, E1, W = c["M1"], c["M2"], c["E1"], c["W"]
    xi, xcc, theta = c["xi_c"], c["xi_cc"], c["theta"]
    preds = predicates(t)
    k = len(t)
    out: dict[BoundId, BatchResult] = {}
    for bid in ids:
        spec = CATALOGUE[bid]
        applicable = n >= spec.min_n
        neg = None
        if bid is BoundId.T12_NG:
            applicable = applicable & (c["co_ok"] == 1)
            lhs = xi + c["co_xi_c"]
            rhs = 2 * (M1 + c["co_M1"])
            holds, equal = lhs >= rhs, lhs == rhs
            pred = preds[Pred.ALL_ECC_TWO] & (c["co_r"] == 2) & (c["co_d"] == 2)
            out[bid] = BatchResult(applicable, holds, equal, pred, None)
            continue
        if bid is BoundId.T10_L:
            safe = np.where(applicable, 1, 0)
            holds, equal = _power_ge(
                np.where(applicable, xi, 1), D * safe, np.where(applicable, dl, 1), np.where(applicable, xcc, 1)
            )
        else:
            lhs, rhs = _cross_terms(bid, n, m, r, d, D, dl, M1, M2, E1, W, xi, xcc, theta, c)
            if spec.form == "squared":
                neg = rhs < 0
            if spec.upper:
                holds = lhs <= rhs
            else:
                holds = lhs >= rhs
            equal = lhs == rhs
            if neg is not None:
                holds = holds | neg
                equal = equal & ~neg
        pred = _union(preds, spec.condition, k)
        alt = _union(preds, spec.alt_condition, k)
        out[bid] = BatchResult(
            np.asarray(applicable, dtype=bool),
            np.asarray(holds, dtype=bool),
            np.asarray(equal, dtype=bool),
            pred,
            alt,
            None if neg is None else np.asarray(neg, dtype=bool),
        )
    return out


def _union(preds, condition, k):
    if condition is None:
        return None
    acc = np.zeros(k, dtype=bool)
    for p in condition:
        acc = acc | preds[p]
    return acc


def _cross_terms(bid, n, m, r, d, D, dl, M1, M2, E1, W, xi, xcc, theta, c):
    """Integer ``(lhs, rhs)`` whose comparison matches xi_c against the bound.

    Rows where the bound is inapplicable may produce meaningless values; they
    are masked by the caller.
    """
    B = BoundId
    # n-1 is zero only on inapplicable rows; keep the arithmetic defined there
    n1 = np.where(n > 1, n - 1, 1)
    if bid is B.T1i_L:
        return xi, r * M1
    if bid is B.T1i_U:
        return xi, d * M1
    if bid is B.T1ii_stated_L:
        return xi, r * dl * dl
    if bid is B.T1ii_stated_U:
        return xi, d * D * D
    if bid is B.T1ii_corrected_L:
        return xi, n * r * dl * dl
    if bid is B.T1ii_corrected_U:
        return xi, n * d * D * D
    if bid is B.T1iii_L:
        return xi, dl * dl * theta
    if bid is B.T1iii_U:
        return xi, D * D * theta
    if bid is B.T2_U:
        return xi, (2 * m - dl * (n - 1)) * theta + (dl - 1) * xcc
    if bid is B.C1_U:
        return xi, (2 * m - dl * (n - 1)) * (n * n - 2 * m) + (2 * m * n - M1) * (dl - 1)
    if bid is B.T3_U:
        return xi * xi, (D * D + dl * dl) * M1 * E1 - n * D * D * dl * dl * E1
    if bid is B.T4_U:
        return xi, n * M1 - 2 * M2
    if bid is B.T5i_L:
        return xi, M1
    if bid is B.T5ii_L:
        return xi, xcc
    if bid is B.T6_L:
        den = d * D * D + r * dl * dl
        den = np.where(den > 0, den, 1)
        return xi * n * den, n * D * D * dl * dl * E1 + r * d * M1 * M1
    if bid is B.T7_stated_L:
        return 4 * n * xi * xi, 4 * M1 * E1 - n**3 * (d * D * D + r * dl * dl)
    if bid is B.T7_derived_L:
        return 4 * n * xi * xi, 4 * E1 * M1 * M1 - n**3 * (d * D * D - r * dl * dl) ** 2
    if bid is B.T8_L:
        return xi * n1, 2 * M2
    if bid is B.T9_L:
        return xi * n1, 2 * M1 * n1 - 2 * M2
    if bid is B.T11_L:
        return xi * n1, 2 * dl * dl * W
    if bid is B.C2_L:
        return xi * n1 * c["H_den"], 2 * dl * dl * c["H_num"]
    if bid is B.T13_L:
        return xi, (2 * n - 1) * (n - 1)
    raise ValueError(bid)
