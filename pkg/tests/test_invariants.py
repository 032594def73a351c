from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from eccbounds.families import FamilySpec, build
from eccbounds.graph import DisconnectedGraphError, Graph, from_edge_list, parse_graph6
from eccbounds.invariants import (
    IDENTITY_CHECKS,
    all_pairs_distances,
    compute_all,
    identity_failures,
    modified_eccentric_connectivity,
)
from eccbounds.oracle import naive_invariants, naive_xi_c

from conftest import connected_graphs


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def test_k4():
    inv = compute_all(parse_graph6("C~"))
    assert (inv.n, inv.m, inv.r, inv.d, inv.theta) == (4, 6, 1, 1, 4)
    assert (inv.M1, inv.M2, inv.E1, inv.E2, inv.W, inv.H) == (36, 54, 4, 6, 6, 6)
    assert (inv.xi_c, inv.xi_cc) == (36, 12)


def test_p4():
    inv = compute_all(path(4))
    assert inv.profile.nbr_deg_sum == (2, 3, 3, 2)
    assert inv.profile.ecc == (3, 2, 2, 3)
    assert (inv.M1, inv.M2, inv.W) == (10, 8, 10)
    assert inv.H == Fraction(13, 3)
    assert inv.xi_c == 24
    assert inv.to_dict()["harary"] == {"num": 13, "den": 3, "decimal": "4.333333"}


@pytest.mark.parametrize(
    "g, expected",
    [
        (from_edge_list(4, [(0, 1), (0, 2), (0, 3)]), 21),
        (from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)]), 40),
        (from_edge_list(5, combinations(range(5), 2)), 80),
        (build(FamilySpec("hypercube", (3,))), 216),
        (path(2), 2),
        (path(3), 10),
    ],
)
def test_small_values(g, expected):
    assert modified_eccentric_connectivity(g) == expected
    assert naive_xi_c(g) == expected


def test_single_vertex():
    inv = compute_all(Graph(1, (0,)))
    assert inv.xi_c == 0 and inv.W == 0 and inv.H == 0


def test_disconnected_raises():
    with pytest.raises(DisconnectedGraphError):
        compute_all(parse_graph6("D??"))


def test_distance_matrix_dtype():
    dist = all_pairs_distances(path(5))
    assert dist.dtype.name == "uint8"
    assert dist[0, 4] == 4


@settings(max_examples=200)
@given(connected_graphs(max_n=9))
def test_matches_naive(g):
    inv = compute_all(g)
    ref = naive_invariants(g)
    for key in ("n", "m", "xi_c", "xi_cc", "M1", "M2", "E1", "E2", "theta", "W", "H", "r", "d", "Delta", "delta"):
        assert getattr(inv, key) == ref[key], key


@settings(max_examples=100)
@given(connected_graphs(min_n=2, max_n=9))
def test_matches_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    ecc = nx.eccentricity(G)
    inv = compute_all(g)
    xi = sum(sum(G.degree(u) for u in G[v]) * ecc[v] for v in G)
    assert inv.xi_c == xi
    assert inv.W == int(nx.wiener_index(G))
    assert inv.r == nx.radius(G) and inv.d == nx.diameter(G)


@settings(max_examples=200)
@given(connected_graphs(max_n=10))
def test_identities_hold(g):
    assert identity_failures(g, compute_all(g)) == 0


def test_identity_names_fit_in_mask():
    assert len(IDENTITY_CHECKS) == 12


def test_to_dict_keys_are_snake_case():
    d = compute_all(path(4)).to_dict()
    assert all(k == k.lower() for k in d)
    assert d["xi_c"] == 24 and d["degrees"] == [1, 2, 2, 1]
