"""Exhaustive verification of target-graph properties.

The coloring algorithms lean on extension properties of their targets: P(k,n)
says every ordered k-clique, for every prescribed sign vector, has at least n
common neighbors realizing it.  This module checks those properties by brute
force, enumerates sign-preserving automorphisms (with iterated degree-pair
refinement as the pruning invariant), and decides vertex/edge transitivity
and antiautomorphy from them.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import product

from .core import AntitwinnedGraph, NEG, POS, SignedGraph, negate, rho_t4

__all__ = [
    "PropertyReport",
    "check_pkn",
    "common_positive_neighbors",
    "pstar21_excluded_pairs",
    "check_pstar21",
    "automorphisms",
    "find_isomorphism",
    "check_transitivity",
    "check_antiautomorphic",
]


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of an exhaustive property check.

    ``counterexamples`` is nonempty exactly when ``holds`` is false; its entry
    shape depends on the property (documented per check).
    """

    name: str
    holds: bool
    counterexamples: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.holds != (len(self.counterexamples) == 0):
            raise ValueError("counterexamples must be nonempty iff the property fails")


def _ordered_cliques(g: SignedGraph, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of k distinct, pairwise adjacent vertices."""

    def extend(tup: tuple[int, ...]):
        if len(tup) == k:
            yield tup
            return
        for v in range(g.n):
            if v in tup:
                continue
            if all(g.has_edge(u, v) for u in tup):
                yield from extend(tup + (v,))

    yield from extend(())


def check_pkn(g: SignedGraph, k: int, n: int) -> PropertyReport:
    """Check extension property P(k, n) exhaustively.

    Every ordered k-tuple inducing a clique is tried against all 2^k sign
    vectors; the property holds when each combination has at least ``n``
    vertices adjacent to the whole tuple with the prescribed signs.
    Counterexample entries are ``(tuple, sign_vector, achieved_count)``.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    pos_nbrs = [g.signed_neighbors(v, POS) for v in range(g.n)]
    neg_nbrs = [g.signed_neighbors(v, NEG) for v in range(g.n)]
    bad = []
    for tup in _ordered_cliques(g, k):
        for alpha in product((POS, NEG), repeat=k):
            witnesses = None
            for v, a in zip(tup, alpha):
                nbrs = pos_nbrs[v] if a == POS else neg_nbrs[v]
                witnesses = nbrs if witnesses is None else witnesses & nbrs
                if not witnesses:
                    break
            count = len(witnesses - set(tup)) if witnesses else 0
            if count < n:
                bad.append((tup, alpha, count))
    return PropertyReport(f"P({k},{n})", not bad, tuple(bad))


def common_positive_neighbors(g: SignedGraph, u: int, v: int) -> frozenset[int]:
    """Vertices positively adjacent to both ``u`` and ``v``."""
    if u == v:
        raise ValueError("need two distinct vertices")
    return g.signed_neighbors(u, POS) & g.signed_neighbors(v, POS)


def pstar21_excluded_pairs(atg: AntitwinnedGraph) -> frozenset[frozenset[int]]:
    """The four pairs exempt from the weak common-positive-neighbor property.

    Defined for the doubled T4 target: for each of the identity pairs {1,4}
    and {2,3}, the two mixed-copy vertex pairs are exempt.  Requires the
    standard doubled-T4 vertex order (plus copies 0..3, minus copies 4..7).
    """
    if atg.graph.n != 8 or atg.graph != rho_t4().graph:
        raise ValueError("excluded pairs are defined for the doubled T4 target")
    n = 4
    return frozenset(
        {
            frozenset({0 + n, 3}),  # 1-, 4+
            frozenset({0, 3 + n}),  # 1+, 4-
            frozenset({1 + n, 2}),  # 2-, 3+
            frozenset({1, 2 + n}),  # 2+, 3-
        }
    )


def check_pstar21(atg: AntitwinnedGraph) -> PropertyReport:
    """Weak pair property of the doubled T4 target.

    Every pair of distinct, non-antitwin vertices outside the four excluded
    pairs must have a common positive neighbor.  Counterexample entries are
    ``((u, v), None, 0)``.
    """
    if not isinstance(atg, AntitwinnedGraph):
        raise TypeError("input must be an AntitwinnedGraph")
    g = atg.graph
    excluded = pstar21_excluded_pairs(atg)
    bad = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if atg.twin(u) == v or frozenset({u, v}) in excluded:
                continue
            if not common_positive_neighbors(g, u, v):
                bad.append(((u, v), None, 0))
    return PropertyReport("P*(2,1)", not bad, tuple(bad))


# ---------------------------------------------------------------------------
# Automorphisms and isomorphisms of signed graphs.
# ---------------------------------------------------------------------------


def _refined_colors(graphs: Sequence[SignedGraph]) -> list[tuple[int, ...]]:
    """Iterated (positive-degree, negative-degree) refinement to a fixpoint.

    All graphs share one color dictionary so classes are comparable across
    them (needed for isomorphism search).
    """
    colorings = [
        tuple((g.pos_degree(v), g.neg_degree(v)) for v in range(g.n)) for g in graphs
    ]
    key_ids: dict = {}
    colorings = [
        tuple(key_ids.setdefault(c, len(key_ids)) for c in cols) for cols in colorings
    ]
    while True:
        key_ids = {}
        new = []
        for g, cols in zip(graphs, colorings):
            sigs = []
            for v in range(g.n):
                nbr_profile = sorted((s, cols[u]) for u, s in g.neighbors(v).items())
                sigs.append((cols[v], tuple(nbr_profile)))
            new.append(tuple(key_ids.setdefault(c, len(key_ids)) for c in sigs))
        if new == colorings:
            return list(colorings)
        colorings = new


def _signed_maps(g1: SignedGraph, g2: SignedGraph) -> Iterator[tuple[int, ...]]:
    """All bijections g1 -> g2 preserving edge signs and non-edges."""
    if g1.n != g2.n:
        return
    n = g1.n
    cols1, cols2 = _refined_colors([g1, g2])
    if sorted(cols1) != sorted(cols2):
        return
    stat1 = [[g1.status(u, v) for v in range(n)] for u in range(n)]
    stat2 = [[g2.status(u, v) for v in range(n)] for u in range(n)]
    candidates = [
        [w for w in range(n) if cols2[w] == cols1[v]] for v in range(n)
    ]
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(image)
            return
        row = stat1[v]
        for w in candidates[v]:
            if used[w]:
                continue
            roww = stat2[w]
            if all(roww[image[u]] == row[u] for u in range(v)):
                image[v] = w
                used[w] = True
                yield from extend(v + 1)
                used[w] = False
                image[v] = -1

    yield from extend(0)


def automorphisms(g: SignedGraph) -> Iterator[tuple[int, ...]]:
    """Yield every sign-preserving vertex permutation of ``g``.

    Signs of edges and non-adjacency are both preserved.  Intended for small
    graphs (around 24 vertices or fewer).
    """
    return _signed_maps(g, g)


def find_isomorphism(g1: SignedGraph, g2: SignedGraph) -> tuple[int, ...] | None:
    """A sign-preserving isomorphism ``g1 -> g2``, or None."""
    for m in _signed_maps(g1, g2):
        return m
    return None


def check_transitivity(
    g: SignedGraph, n: int, autos: Sequence[tuple[int, ...]] | None = None
) -> PropertyReport:
    """Transitivity on ordered signed n-cliques (n=1: vertices, n=2: edges).

    For every sign pattern, the automorphism group must act transitively on
    the ordered n-cliques realizing it.  Counterexample entries are
    ``(tuple, pattern, 0)`` for tuples outside the orbit of their pattern's
    first representative.
    """
    if autos is None:
        autos = list(automorphisms(g))
    groups: dict[tuple, list[tuple[int, ...]]] = {}
    for tup in _ordered_cliques(g, n):
        pattern = tuple(
            g.sign(tup[i], tup[j]) for i in range(n) for j in range(i + 1, n)
        )
        groups.setdefault(pattern, []).append(tup)
    bad = []
    for pattern, tuples in sorted(groups.items()):
        seed = tuples[0]
        orbit = {tuple(perm[v] for v in seed) for perm in autos}
        for tup in tuples:
            if tup not in orbit:
                bad.append((tup, pattern, 0))
    names = {1: "vertex-transitive", 2: "edge-transitive"}
    return PropertyReport(names.get(n, f"K{n}-transitive"), not bad, tuple(bad))


def check_antiautomorphic(g: SignedGraph) -> tuple[int, ...] | None:
    """A sign-reversing self-isomorphism (isomorphism onto the negation), or None."""
    return find_isomorphism(g, negate(g))
