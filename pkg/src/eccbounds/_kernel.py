"""Compiled inner loop of the exhaustive sweep (n <= 8).

For every edge mask in ``[lo, hi)`` the kernel decodes the graph, drops it if
disconnected and otherwise writes one row of integer invariants.  Harary
sums are scaled by ``HARARY_SCALE`` so the row stays integral.

Bit ``k`` of the ``ident`` column flags a failure of
``invariants.IDENTITY_CHECKS[k]`` (0 = all good).
"""

from __future__ import annotations

import numpy as np
from numba import njit

KERNEL_MAX_N = 8
HARARY_SCALE = 840  # lcm(1..8)

COLUMNS = (
    "mask", "n", "m", "Delta", "delta", "r", "d", "theta", "M1", "M2", "E1", "E2",
    "W", "H_num", "H_den", "xi_c", "xi_cc", "ident",
    "co_ok", "co_xi_c", "co_M1", "co_r", "co_d",
)
COL = {name: i for i, name in enumerate(COLUMNS)}


_LOWBIT = np.array([0] + [(x & -x).bit_length() - 1 for x in range(1, 256)], dtype=np.int64)
_POPCNT = np.array([bin(x).count("1") for x in range(256)], dtype=np.int64)

# indices into the per-graph scratch vector filled by _stats
_S_M, _S_DMAX, _S_DMIN, _S_R, _S_D, _S_TH, _S_M1, _S_M2, _S_E1, _S_E2, _S_W, _S_H, _S_XI, _S_XCC, _S_ID = range(15)


@njit(cache=True)
def _stats(n, rows, s, lowbit, popcnt):
    """Fill ``s`` with the invariants of the graph ``rows``; False if disconnected."""
    full = (1 << n) - 1
    deg = np.zeros(n, np.int64)
    ecc = np.zeros(n, np.int64)
    dsum = np.zeros(n, np.int64)
    nbr = np.zeros(n, np.int64)
    h2 = 0
    for src in range(n):
        seen = 1 << src
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = 0
            f = frontier
            while f:
                v = lowbit[f & 0xFF] if f & 0xFF else 8 + lowbit[(f >> 8) & 0xFF]
                nxt |= rows[v]
                f &= f - 1
            frontier = nxt & ~seen
            seen |= frontier
            c = popcnt[frontier & 0xFF] + popcnt[(frontier >> 8) & 0xFF]
            if c:
                ecc[src] = level
                dsum[src] += c * level
                h2 += c * (HARARY_SCALE // level)
        if seen != full:
            return False
    ident = 0
    m2deg = 0
    for v in range(n):
        deg[v] = popcnt[rows[v] & 0xFF] + popcnt[(rows[v] >> 8) & 0xFF]
        m2deg += deg[v]
    m = m2deg // 2
    M2 = 0
    E2 = 0
    xi_edges = 0
    for u in range(n):
        for v in range(n):
            if rows[u] >> v & 1:
                nbr[u] += deg[v]
                if u < v:
                    M2 += deg[u] * deg[v]
                    E2 += ecc[u] * ecc[v]
                    xi_edges += deg[u] * ecc[v] + deg[v] * ecc[u]
    dmax = 0
    dmin = n
    r = n
    d = 0
    theta = 0
    M1 = 0
    E1 = 0
    xi = 0
    xcc = 0
    snbr = 0
    sdn = 0
    W2 = 0
    for v in range(n):
        dmax = max(dmax, deg[v])
        dmin = min(dmin, deg[v])
        r = min(r, ecc[v])
        d = max(d, ecc[v])
        theta += ecc[v]
        M1 += deg[v] * deg[v]
        E1 += ecc[v] * ecc[v]
        xi += nbr[v] * ecc[v]
        xcc += deg[v] * ecc[v]
        snbr += nbr[v]
        sdn += deg[v] * nbr[v]
        W2 += dsum[v]
        if ecc[v] > n - deg[v]:
            ident |= 1 << 6
        if n > 1 and ecc[v] * (n - 1) < dsum[v]:
            ident |= 1 << 7
        if dsum[v] < 2 * n - 2 - deg[v]:
            ident |= 1 << 8
    W = W2 // 2
    H = h2 // 2
    if snbr != M1:
        ident |= 1 << 0
    if sdn != 2 * M2:
        ident |= 1 << 1
    if xi_edges != xi:
        ident |= 1 << 2
    if xi < xcc:
        ident |= 1 << 3
    complete = 2 * m == n * (n - 1)
    if W * HARARY_SCALE < H or (W * HARARY_SCALE == H) != complete:
        ident |= 1 << 4
    if not (r <= d and d <= 2 * r):
        ident |= 1 << 5
    if m2deg % 2 != 0:
        ident |= 1 << 9
    if r == d and xi != r * M1:
        ident |= 1 << 10
    if dmax == dmin and (xi != dmax * xcc or xi != dmax * dmax * theta):
        ident |= 1 << 11
    s[_S_M] = m
    s[_S_DMAX] = dmax
    s[_S_DMIN] = dmin
    s[_S_R] = r
    s[_S_D] = d
    s[_S_TH] = theta
    s[_S_M1] = M1
    s[_S_M2] = M2
    s[_S_E1] = E1
    s[_S_E2] = E2
    s[_S_W] = W
    s[_S_H] = H
    s[_S_XI] = xi
    s[_S_XCC] = xcc
    s[_S_ID] = ident
    return True


@njit(cache=True)
def _scan(n, lo, hi, pi, pj, with_complement, out, lowbit, popcnt):
    e = n * (n - 1) // 2
    full = (1 << n) - 1
    rows = np.zeros(n, np.int64)
    crows = np.zeros(n, np.int64)
    s = np.zeros(15, np.int64)
    cs = np.zeros(15, np.int64)
    count = 0
    for mask in range(lo, hi):
        for v in range(n):
            rows[v] = 0
        for k in range(e):
            if mask >> (e - 1 - k) & 1:
                rows[pi[k]] |= 1 << pj[k]
                rows[pj[k]] |= 1 << pi[k]
        if not _stats(n, rows, s, lowbit, popcnt):
            continue
        o = out[count]
        o[0] = mask
        o[1] = n
        o[2] = s[_S_M]
        o[3] = s[_S_DMAX]
        o[4] = s[_S_DMIN]
        o[5] = s[_S_R]
        o[6] = s[_S_D]
        o[7] = s[_S_TH]
        o[8] = s[_S_M1]
        o[9] = s[_S_M2]
        o[10] = s[_S_E1]
        o[11] = s[_S_E2]
        o[12] = s[_S_W]
        o[13] = s[_S_H]
        o[14] = HARARY_SCALE
        o[15] = s[_S_XI]
        o[16] = s[_S_XCC]
        o[17] = s[_S_ID]
        o[18] = 0
        o[19] = 0
        o[20] = 0
        o[21] = 0
        o[22] = 0
        if with_complement and n >= 4:
            for v in range(n):
                crows[v] = full & ~rows[v] & ~(1 << v)
            if _stats(n, crows, cs, lowbit, popcnt):
                o[18] = 1
                o[19] = cs[_S_XI]
                o[20] = cs[_S_M1]
                o[21] = cs[_S_R]
                o[22] = cs[_S_D]
        count += 1
    return count


def scan_masks(n: int, lo: int, hi: int, with_complement: bool = True) -> np.ndarray:
    """Invariant rows (see ``COLUMNS``) of the connected graphs with masks in ``[lo, hi)``."""
    if not 1 <= n <= KERNEL_MAX_N:
        raise ValueError(f"kernel supports 1 <= n <= {KERNEL_MAX_N}, got {n}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    pi = np.array([p[0] for p in pairs], dtype=np.int64)
    pj = np.array([p[1] for p in pairs], dtype=np.int64)
    out = np.empty((max(hi - lo, 0), len(COLUMNS)), dtype=np.int64)
    count = _scan(n, lo, hi, pi, pj, with_complement, out, _LOWBIT, _POPCNT)
    return out[:count]
