"""Degree, distance and eccentricity invariants of a connected graph.

Everything is exact: integer sums, with the Harary index kept as a reduced
:class:`~fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .graph import DisconnectedGraphError, Graph, _iter_bits


@dataclass(frozen=True)
class VertexProfile:
    deg: tuple[int, ...]
    # sum of neighbour degrees, delta(v)
    nbr_deg_sum: tuple[int, ...]
    ecc: tuple[int, ...]
    dist_sum: tuple[int, ...]


@dataclass(frozen=True)
class InvariantSet:
    n: int
    m: int
    Delta: int
    delta: int
    r: int
    d: int
    theta: int
    M1: int
    M2: int
    E1: int
    E2: int
    W: int
    H: Fraction
    xi_c: int
    xi_cc: int
    profile: VertexProfile

    def to_dict(self) -> dict[str, Any]:
        """Flat JSON-ready mapping with snake_case keys."""
        return {
            "n": self.n,
            "m": self.m,
            "max_degree": self.Delta,
            "min_degree": self.delta,
            "radius": self.r,
            "diameter": self.d,
            "total_eccentricity": self.theta,
            "m1": self.M1,
            "m2": self.M2,
            "e1": self.E1,
            "e2": self.E2,
            "wiener": self.W,
            "harary": {
                "num": self.H.numerator,
                "den": self.H.denominator,
                "decimal": f"{float(self.H):.6f}",
            },
            "xi_c": self.xi_c,
            "xi_cc": self.xi_cc,
            "degrees": list(self.profile.deg),
            "neighbor_degree_sums": list(self.profile.nbr_deg_sum),
            "eccentricities": list(self.profile.ecc),
            "distance_sums": list(self.profile.dist_sum),
        }


def _bfs_row(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    seen = frontier = 1 << src
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in _iter_bits(frontier):
            dist[v] = level
    if -1 in dist:
        raise DisconnectedGraphError(
            f"vertex {dist.index(-1)} is unreachable from vertex {src}"
        )
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """``n x n`` table of shortest-path lengths (uint8; diameters stay below 64)."""
    return np.array([_bfs_row(g, v) for v in range(g.n)], dtype=np.uint8)


def compute_all(g: Graph) -> InvariantSet:
    n = g.n
    dist = [_bfs_row(g, v) for v in range(n)]
    deg = g.degrees()
    nbr = [sum(deg[u] for u in _iter_bits(g.rows[v])) for v in range(n)]
    ecc = [max(row) for row in dist]
    dsum = [sum(row) for row in dist]
    edges = g.edges()

    xi_c = sum(a * e for a, e in zip(nbr, ecc))
    xi_c_edges = sum(deg[u] * ecc[v] + deg[v] * ecc[u] for u, v in edges)
    if xi_c != xi_c_edges:
        raise AssertionError(
            f"vertex-sum and edge-sum forms disagree: {xi_c} != {xi_c_edges}"
        )
    harary = sum(
        (Fraction(1, dist[u][v]) for u in range(n) for v in range(u + 1, n)),
        Fraction(0),
    )
    return InvariantSet(
        n=n,
        m=len(edges),
        Delta=max(deg),
        delta=min(deg),
        r=min(ecc),
        d=max(ecc),
        theta=sum(ecc),
        M1=sum(k * k for k in deg),
        M2=sum(deg[u] * deg[v] for u, v in edges),
        E1=sum(e * e for e in ecc),
        E2=sum(ecc[u] * ecc[v] for u, v in edges),
        W=sum(dsum) // 2,
        H=harary,
        xi_c=xi_c,
        xi_cc=sum(k * e for k, e in zip(deg, ecc)),
        profile=VertexProfile(tuple(deg), tuple(nbr), tuple(ecc), tuple(dsum)),
    )


# Identities every connected graph satisfies; bit k of a failure mask refers to entry k.
IDENTITY_CHECKS = (
    "sum of neighbour degree sums equals M1",
    "sum of deg(v)*delta(v) equals 2*M2",
    "edge-sum form of xi_c equals vertex-sum form",
    "xi_c >= xi^c",
    "W >= H, with equality exactly on complete graphs",
    "r <= d <= 2r",
    "ecc(v) <= n - deg(v)",
    "ecc(v) >= D(v)/(n-1)",
    "D(v) >= 2n - 2 - deg(v)",
    "sum of degrees equals 2m",
    "self-centred graphs: xi_c = e*M1",
    "k-regular graphs: xi_c = k*xi^c = k^2*theta",
)


def identity_failures(g: Graph, inv: InvariantSet) -> int:
    """Bit mask of violated ``IDENTITY_CHECKS`` (0 when all hold)."""
    n, p = inv.n, inv.profile
    edges = g.edges()
    bad = [
        sum(p.nbr_deg_sum) != inv.M1,
        sum(k * s for k, s in zip(p.deg, p.nbr_deg_sum)) != 2 * inv.M2,
        sum(p.deg[u] * p.ecc[v] + p.deg[v] * p.ecc[u] for u, v in edges) != inv.xi_c,
        inv.xi_c < inv.xi_cc,
        inv.W < inv.H or (inv.W == inv.H) != (2 * inv.m == n * (n - 1)),
        not inv.r <= inv.d <= 2 * inv.r,
        any(e > n - k for e, k in zip(p.ecc, p.deg)),
        n > 1 and any(e * (n - 1) < s for e, s in zip(p.ecc, p.dist_sum)),
        any(s < 2 * n - 2 - k for s, k in zip(p.dist_sum, p.deg)),
        sum(p.deg) != 2 * inv.m,
        inv.r == inv.d and inv.xi_c != inv.r * inv.M1,
        inv.Delta == inv.delta
        and (inv.xi_c != inv.Delta * inv.xi_cc or inv.xi_c != inv.Delta**2 * inv.theta),
    ]
    return sum(1 << k for k, flag in enumerate(bad) if flag)


def modified_eccentric_connectivity(g: Graph) -> int:
    """Sum over vertices of (neighbour degree sum) x (eccentricity)."""
    return compute_all(g).xi_c
