"""Exact evaluation of known bounds on the modified eccentric connectivity index.

Each bound compares ``xi_c`` (the left-hand side) with a closed expression in
other invariants.  Comparisons never touch floating point:

* bounds with denominators are evaluated as :class:`~fractions.Fraction`;
* square-root bounds compare ``xi_c**2`` against the radicand;
* the power-mean bound compares ``xi_c**Delta`` with ``delta**delta * xi_cc**Delta``.

Two statements fail as printed and ship with a corrected companion:
``T1ii_stated`` lacks a factor ``n``; in ``T7_stated`` the degree-eccentricity
difference and the Zagreb factor should both enter squared.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .graph import Graph, complement, is_connected
from .invariants import InvariantSet, compute_all

log = logging.getLogger(__name__)


class BoundId(str, enum.Enum):
    T1i_L = "T1i_L"
    T1i_U = "T1i_U"
    T1ii_stated_L = "T1ii_stated_L"
    T1ii_stated_U = "T1ii_stated_U"
    T1ii_corrected_L = "T1ii_corrected_L"
    T1ii_corrected_U = "T1ii_corrected_U"
    T1iii_L = "T1iii_L"
    T1iii_U = "T1iii_U"
    T2_U = "T2_U"
    C1_U = "C1_U"
    T3_U = "T3_U"
    T4_U = "T4_U"
    T5i_L = "T5i_L"
    T5ii_L = "T5ii_L"
    T6_L = "T6_L"
    T7_stated_L = "T7_stated_L"
    T7_derived_L = "T7_derived_L"
    T8_L = "T8_L"
    T9_L = "T9_L"
    T10_L = "T10_L"
    T11_L = "T11_L"
    C2_L = "C2_L"
    T12_NG = "T12_NG"
    T13_L = "T13_L"


class Pred(str, enum.Enum):
    REGULAR = "REGULAR"
    SELF_CENTERED = "SELF_CENTERED"
    COMPLETE = "COMPLETE"
    STAR = "STAR"
    PATH = "PATH"
    P2 = "P2"
    P3 = "P3"
    COMPLETE_MINUS_MATCHING = "COMPLETE_MINUS_MATCHING"
    ALL_ECC_TWO = "ALL_ECC_TWO"
    REGULAR_AND_SELF_CENTERED = "REGULAR_AND_SELF_CENTERED"


# Alias matching the domain vocabulary.
EqualityPredicateId = Pred


class BoundPreconditionError(ValueError):
    """The bound is not defined for this graph (too few vertices, etc.)."""


class InapplicableBoundError(BoundPreconditionError):
    """The bound's hypotheses are not met; this is not a violation."""


@dataclass(frozen=True)
class BoundSpec:
    id: BoundId
    upper: bool
    # "plain", "squared" (root-form bound) or "power" (xi_c**Delta form)
    form: str
    min_n: int
    # union of predicates under which the statement claims equality
    condition: tuple[Pred, ...] | None
    asserted: bool
    formula: str
    alt_condition: tuple[Pred, ...] | None = None


def _spec(bid, upper, form, min_n, condition, formula, asserted=True, alt=None):
    return BoundSpec(BoundId(bid), upper, form, min_n, condition, asserted, formula, alt)


_RS = (Pred.REGULAR_AND_SELF_CENTERED,)
_K = (Pred.COMPLETE,)

CATALOGUE: dict[BoundId, BoundSpec] = {
    s.id: s
    for s in [
        _spec("T1i_L", False, "plain", 1, (Pred.SELF_CENTERED,), "xi_c >= r*M1"),
        _spec("T1i_U", True, "plain", 1, (Pred.SELF_CENTERED,), "xi_c <= d*M1"),
        _spec("T1ii_stated_L", False, "plain", 1, _RS, "xi_c >= r*delta^2", asserted=False),
        _spec("T1ii_stated_U", True, "plain", 1, _RS, "xi_c <= d*Delta^2", asserted=False),
        _spec("T1ii_corrected_L", False, "plain", 1, _RS, "xi_c >= n*r*delta^2"),
        _spec("T1ii_corrected_U", True, "plain", 1, _RS, "xi_c <= n*d*Delta^2"),
        _spec("T1iii_L", False, "plain", 1, (Pred.REGULAR,), "xi_c >= delta^2*theta"),
        _spec("T1iii_U", True, "plain", 1, (Pred.REGULAR,), "xi_c <= Delta^2*theta"),
        _spec("T2_U", True, "plain", 1, (Pred.REGULAR,),
              "xi_c <= (2m - delta(n-1))*theta + (delta-1)*xi^c"),
        _spec("C1_U", True, "plain", 1, _K,
              "xi_c <= (2m - delta(n-1))(n^2 - 2m) + (2mn - M1)(delta-1)"),
        _spec("T3_U", True, "squared", 1, _RS,
              "xi_c^2 <= (Delta^2+delta^2)*M1*E1 - n*Delta^2*delta^2*E1"),
        _spec("T4_U", True, "plain", 1,
              (Pred.COMPLETE, Pred.COMPLETE_MINUS_MATCHING, Pred.PATH), "xi_c <= n*M1 - 2*M2"),
        _spec("T5i_L", False, "plain", 1, _K, "xi_c >= M1"),
        _spec("T5ii_L", False, "plain", 1, (Pred.P3,), "xi_c >= xi^c"),
        _spec("T6_L", False, "plain", 2, _RS,
              "xi_c >= [Delta^2 delta^2 E1 + (r d / n) M1^2] / (d Delta^2 + r delta^2)"),
        _spec("T7_stated_L", False, "squared", 1, None,
              "xi_c^2 >= M1*E1/n - (n^2/4)(d Delta^2 + r delta^2)", asserted=False),
        _spec("T7_derived_L", False, "squared", 1, None,
              "xi_c^2 >= E1*M1^2/n - (n^2/4)(d Delta^2 - r delta^2)^2"),
        _spec("T8_L", False, "plain", 2, _K, "xi_c >= 2*M2/(n-1)"),
        _spec("T9_L", False, "plain", 2, (Pred.P2,), "xi_c >= 2*M1 - 2*M2/(n-1)"),
        _spec("T10_L", False, "power", 2, (Pred.P2,),
              "xi_c >= delta^(delta/Delta) * xi^c", alt=(Pred.REGULAR,)),
        _spec("T11_L", False, "plain", 2, _K, "xi_c >= 2*delta^2*W/(n-1)"),
        _spec("C2_L", False, "plain", 2, _K, "xi_c >= 2*delta^2*H/(n-1)"),
        _spec("T12_NG", False, "plain", 4, (Pred.ALL_ECC_TWO,),
              "xi_c(G) + xi_c(co-G) >= 2*(M1(G) + M1(co-G))"),
        _spec("T13_L", False, "plain", 3, (Pred.STAR,), "xi_c >= (2n-1)(n-1)"),
    ]
}

# Ids handled by check_all; the Nordhaus-Gaddum bound needs the complement too.
SINGLE_GRAPH_IDS: tuple[BoundId, ...] = tuple(b for b in BoundId if b is not BoundId.T12_NG)


@dataclass(frozen=True)
class BoundCheck:
    id: BoundId
    lhs: int | Fraction
    rhs: int | Fraction
    holds: bool
    is_equality: bool
    predicted_equality: bool | None
    agreement: bool | None
    note: str = ""
    form: str = "plain"
    alt_predicted_equality: bool | None = None
    alt_agreement: bool | None = None

    @property
    def asserted(self) -> bool:
        return CATALOGUE[self.id].asserted

    def to_dict(self) -> dict[str, Any]:
        suffix = {"plain": "", "squared": " (squared)", "power": " (power)"}[self.form]
        out: dict[str, Any] = {
            "id": self.id.value,
            "lhs": f"{self.lhs}{suffix}",
            "rhs": f"{self.rhs}{suffix}",
            "holds": self.holds,
            "equality": self.is_equality,
            "predicted_equality": self.predicted_equality,
            "agreement": self.agreement,
            "note": self.note,
        }
        if self.alt_predicted_equality is not None:
            out["alt_predicted_equality"] = self.alt_predicted_equality
            out["alt_agreement"] = self.alt_agreement
        return out


# -- equality predicates ---------------------------------------------------------


def equality_predicate(g: Graph, inv: InvariantSet, p: Pred) -> bool:
    n = g.n
    deg = inv.profile.deg
    if p is Pred.REGULAR:
        return inv.Delta == inv.delta
    if p is Pred.SELF_CENTERED:
        return inv.r == inv.d
    if p is Pred.REGULAR_AND_SELF_CENTERED:
        return inv.Delta == inv.delta and inv.r == inv.d
    if p is Pred.COMPLETE:
        return inv.m == n * (n - 1) // 2
    if p is Pred.STAR:
        return n >= 2 and sorted(deg) == [1] * (n - 1) + [n - 1]
    if p is Pred.PATH:
        if not is_connected(g):
            return False
        if n <= 2:
            return True
        return deg.count(1) == 2 and deg.count(2) == n - 2
    if p is Pred.P2:
        return n == 2 and inv.m == 1
    if p is Pred.P3:
        return n == 3 and inv.m == 2
    if p is Pred.COMPLETE_MINUS_MATCHING:
        missing = [n - 1 - k for k in deg]
        return max(missing) == 1
    if p is Pred.ALL_ECC_TWO:
        return inv.r == 2 and inv.d == 2
    raise ValueError(p)


def _predicted(g: Graph, inv: InvariantSet, preds: tuple[Pred, ...] | None) -> bool | None:
    if preds is None:
        return None
    return any(equality_predicate(g, inv, p) for p in preds)


# -- evaluation ---------------------------------------------------------------------


def _terms(inv: InvariantSet, bid: BoundId) -> tuple[int | Fraction, int | Fraction]:
    """(xi_c-side, bound-side) for one bound; root-form bounds return squares."""
    n, m, r, d = inv.n, inv.m, inv.r, inv.d
    D, dl = inv.Delta, inv.delta
    M1, M2, E1, xi, xcc = inv.M1, inv.M2, inv.E1, inv.xi_c, inv.xi_cc
    B = BoundId
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
        return xi, dl * dl * inv.theta
    if bid is B.T1iii_U:
        return xi, D * D * inv.theta
    if bid is B.T2_U:
        return xi, (2 * m - dl * (n - 1)) * inv.theta + (dl - 1) * xcc
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
        num = D * D * dl * dl * E1 + Fraction(r * d, n) * M1 * M1
        return xi, num / (d * D * D + r * dl * dl)
    if bid is B.T7_stated_L:
        return xi * xi, Fraction(M1 * E1, n) - Fraction(n * n, 4) * (d * D * D + r * dl * dl)
    if bid is B.T7_derived_L:
        return xi * xi, Fraction(E1 * M1 * M1, n) - Fraction(n * n, 4) * (d * D * D - r * dl * dl) ** 2
    if bid is B.T8_L:
        return xi, Fraction(2 * M2, n - 1)
    if bid is B.T9_L:
        return xi, 2 * M1 - Fraction(2 * M2, n - 1)
    if bid is B.T10_L:
        return xi**D, dl**dl * xcc**D
    if bid is B.T11_L:
        return xi, Fraction(2 * dl * dl * inv.W, n - 1)
    if bid is B.C2_L:
        return xi, 2 * dl * dl * inv.H / (n - 1)
    if bid is B.T13_L:
        return xi, (2 * n - 1) * (n - 1)
    raise ValueError(f"{bid} is not a single-graph bound")


def _normalise(x: int | Fraction) -> int | Fraction:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def check(inv: InvariantSet, g: Graph, bid: BoundId) -> BoundCheck:
    """Evaluate one bound on ``g`` (with precomputed invariants ``inv``)."""
    bid = BoundId(bid)
    spec = CATALOGUE[bid]
    if bid is BoundId.T12_NG:
        return check_nordhaus_gaddum(g)
    if g.n < spec.min_n:
        raise InapplicableBoundError(f"{bid.value} requires n >= {spec.min_n}, got n={g.n}")
    lhs, rhs = (_normalise(x) for x in _terms(inv, bid))
    note = ""
    if spec.form == "squared" and rhs < 0:
        holds, equal = True, False
        note = "radicand negative; bound holds trivially"
    else:
        holds = lhs <= rhs if spec.upper else lhs >= rhs
        equal = lhs == rhs
    predicted = _predicted(g, inv, spec.condition)
    agreement = None if predicted is None else predicted == equal
    alt_pred = _predicted(g, inv, spec.alt_condition)
    alt_agree = None if alt_pred is None else alt_pred == equal
    if not holds:
        note = (note + "; " if note else "") + "violated"
        if not spec.asserted:
            note += " (printed form; expected)"
    return BoundCheck(bid, lhs, rhs, holds, equal, predicted, agreement, note, spec.form, alt_pred, alt_agree)


def check_all(g: Graph, inv: InvariantSet | None = None) -> list[BoundCheck]:
    """Every single-graph bound that applies to ``g``, in catalogue order."""
    if inv is None:
        inv = compute_all(g)
    out = []
    for bid in SINGLE_GRAPH_IDS:
        if g.n < CATALOGUE[bid].min_n:
            log.debug("skipping %s: requires n >= %d", bid.value, CATALOGUE[bid].min_n)
            continue
        out.append(check(inv, g, bid))
    return out


def check_nordhaus_gaddum(g: Graph) -> BoundCheck:
    """xi_c(G) + xi_c(co-G) >= 2(M1(G) + M1(co-G)) for n >= 4 with both graphs connected."""
    if g.n < 4:
        raise InapplicableBoundError(f"T12_NG requires n >= 4, got n={g.n}")
    cg = complement(g)
    if not is_connected(cg):
        raise InapplicableBoundError("T12_NG requires a connected complement")
    inv = compute_all(g)
    cinv = compute_all(cg)
    lhs = inv.xi_c + cinv.xi_c
    rhs = 2 * (inv.M1 + cinv.M1)
    equal = lhs == rhs
    predicted = equality_predicate(g, inv, Pred.ALL_ECC_TWO) and equality_predicate(
        cg, cinv, Pred.ALL_ECC_TWO
    )
    return BoundCheck(
        BoundId.T12_NG,
        lhs,
        rhs,
        lhs >= rhs,
        equal,
        predicted,
        predicted == equal,
        "" if lhs >= rhs else "violated",
    )
