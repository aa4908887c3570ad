"""Shared test utilities: random instances and brute-force oracles."""

from __future__ import annotations

import random
from itertools import combinations, product

from hypothesis import strategies as st

from signedgrids import SignedGraph, switch, verify_ec
from signedgrids.hom import find_ec_hom


def random_signed_graph(rng: random.Random, n: int, p_edge: float = 0.4) -> SignedGraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                edges.append((u, v, 1 if rng.random() < 0.5 else -1))
    return SignedGraph(n, edges)


@st.composite
def signed_graphs(draw, max_n: int = 8, p_edge: float = 0.4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.floats(min_value=0, max_value=1)) < p_edge:
                edges.append((u, v, draw(st.sampled_from((1, -1)))))
    return SignedGraph(n, edges)


def cycle_edge_key(cycle) -> frozenset:
    k = len(cycle)
    return frozenset(
        (min(cycle[t], cycle[(t + 1) % k]), max(cycle[t], cycle[(t + 1) % k]))
        for t in range(k)
    )


def brute_c4_keys(g: SignedGraph) -> set[frozenset]:
    """All 4-cycles found by checking every 4-subset and every diagonal pairing."""
    keys = set()
    for quad in combinations(range(g.n), 4):
        p, q, r, s = quad
        for d1, d2 in (((p, q), (r, s)), ((p, r), (q, s)), ((p, s), (q, r))):
            x1, x2 = d1
            y1, y2 = d2
            cyc = (x1, y1, x2, y2)
            if all(g.has_edge(cyc[t], cyc[(t + 1) % 4]) for t in range(4)):
                keys.add(cycle_edge_key(cyc))
    return keys


def ec_hom_exists_brute(g: SignedGraph, h: SignedGraph) -> bool:
    """Oracle: try every one of the |V(h)|^|V(g)| mappings."""
    if g.n == 0:
        return True
    if h.n == 0:
        return False
    return any(
        verify_ec(g, h, mapping) for mapping in product(range(h.n), repeat=g.n)
    )


def signed_hom_exists_brute(g: SignedGraph, h: SignedGraph) -> bool:
    """Oracle realizing the definition: enumerate all 2^n switchings."""
    for bits in range(1 << g.n):
        subset = [v for v in range(g.n) if (bits >> v) & 1]
        if find_ec_hom(switch(g, subset), h) is not None:
            return True
    return False
