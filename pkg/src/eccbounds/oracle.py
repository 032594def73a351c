"""Naive reference computations, independent of the bit-set code paths.

Rebuilds a plain adjacency-list dict, runs ``collections.deque`` BFS and
sums every definition term by term.  Slow and obvious on purpose: the sweep
samples graphs through it and the tests use it as an oracle.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .graph import Graph


def adjacency_lists(g: Graph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u in range(g.n):
        for v in range(g.n):
            if u != v and g.has_edge(u, v):
                adj[u].append(v)
    return adj


def bfs_distances(adj: dict[int, list[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def naive_invariants(g: Graph) -> dict[str, object]:
    adj = adjacency_lists(g)
    verts = sorted(adj)
    dist = {v: bfs_distances(adj, v) for v in verts}
    if any(len(dist[v]) != len(verts) for v in verts):
        raise ValueError("graph is disconnected")
    deg = {v: len(adj[v]) for v in verts}
    ecc = {v: max(dist[v].values()) for v in verts}
    nbr = {}
    for v in verts:
        total = 0
        for u in adj[v]:
            total += deg[u]
        nbr[v] = total
    edges = [(u, v) for u in verts for v in adj[u] if u < v]
    pairs = [(u, v) for u in verts for v in verts if u < v]
    return {
        "n": len(verts),
        "m": len(edges),
        "xi_c": sum(nbr[v] * ecc[v] for v in verts),
        "xi_cc": sum(deg[v] * ecc[v] for v in verts),
        "M1": sum(deg[v] ** 2 for v in verts),
        "M2": sum(deg[u] * deg[v] for u, v in edges),
        "E1": sum(ecc[v] ** 2 for v in verts),
        "E2": sum(ecc[u] * ecc[v] for u, v in edges),
        "theta": sum(ecc.values()),
        "W": sum(dist[u][v] for u, v in pairs),
        "H": sum((Fraction(1, dist[u][v]) for u, v in pairs), Fraction(0)),
        "r": min(ecc.values()),
        "d": max(ecc.values()),
        "Delta": max(deg.values()),
        "delta": min(deg.values()),
    }


def naive_xi_c(g: Graph) -> int:
    adj = adjacency_lists(g)
    total = 0
    for v in adj:
        ecc = max(bfs_distances(adj, v).values())
        nbr_deg_sum = 0
        for u in adj[v]:
            nbr_deg_sum += len(adj[u])
        total += nbr_deg_sum * ecc
    return total
