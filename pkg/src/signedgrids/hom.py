"""Exact homomorphism search for 2-edge-colored and signed graphs.

Two notions of mapping are handled:

* an *ec* (edge-color-exact) homomorphism maps every edge to an edge of the
  same sign in the target;
* a *signed* homomorphism is an ec homomorphism achievable after switching
  some subset of the source vertices.  Equivalently the source admits an ec
  homomorphism to the antitwin doubling of the target, and that is exactly
  how :func:`find_signed_hom` computes one.

The chromatic number of a signed graph is the order of its smallest target;
:func:`signed_chromatic_number` computes it exactly on small instances by
sweeping all complete signed targets of increasing order (restricting to
complete targets loses nothing because adding edges to a target never removes
homomorphisms).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache
from itertools import permutations

from .core import NEG, POS, SignedGraph, antitwin_double, switch

__all__ = [
    "Homomorphism",
    "BudgetExceededError",
    "SearchBudget",
    "verify_ec",
    "first_ec_violation",
    "verify_signed",
    "find_ec_hom",
    "find_signed_hom",
    "ec_to_signed",
    "signed_to_ec",
    "verify_signed_with_mapping",
    "signed_chromatic_number",
    "complete_signed_graph",
    "all_complete_targets",
    "canonical_complete_targets",
    "induced_target",
]


class BudgetExceededError(Exception):
    """A search ran out of its node budget; the answer is unknown, not 'none'."""


class SearchBudget:
    """Shared countdown of search nodes across one logical operation."""

    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        if limit < 0:
            raise ValueError("budget must be non-negative")
        self.remaining = limit

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceededError("search node budget exhausted")


@dataclass(frozen=True)
class Homomorphism:
    """A vertex mapping witness.

    ``kind == "ec"``: ``mapping`` sends every source edge to a target edge of
    equal sign.  ``kind == "signed"``: the same holds after switching the
    source at ``switch_set``.
    """

    mapping: tuple[int, ...]
    kind: str = "ec"
    switch_set: frozenset[int] | None = None

    def __post_init__(self):
        if self.kind not in ("ec", "signed"):
            raise ValueError(f"unknown homomorphism kind {self.kind!r}")
        if self.kind == "signed" and self.switch_set is None:
            object.__setattr__(self, "switch_set", frozenset())


def first_ec_violation(
    g: SignedGraph, h: SignedGraph, mapping: Sequence[int]
) -> tuple[int, int] | None:
    """First source edge not carried to an equal-sign target edge, else None."""
    if len(mapping) != g.n:
        raise ValueError("mapping must be total on the source vertices")
    for u, v, s in g.edges:
        if h.status(mapping[u], mapping[v]) != s:
            return (u, v)
    return None


def verify_ec(g: SignedGraph, h: SignedGraph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` is an ec homomorphism from ``g`` to ``h``."""
    return first_ec_violation(g, h, mapping) is None


def verify_signed(g: SignedGraph, h: SignedGraph, hom: Homomorphism) -> bool:
    """Check a witness of either kind against ``g -> h``."""
    if hom.kind == "ec":
        return verify_ec(g, h, hom.mapping)
    return verify_ec(switch(g, hom.switch_set), h, hom.mapping)


def _search_order(g: SignedGraph) -> list[int]:
    # breadth-first from a maximum-degree root, per connected component
    seen = [False] * g.n
    order: list[int] = []
    by_degree = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for root in by_degree:
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for w in sorted(g.neighbors(u)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        order.extend(queue)
    return order


def find_ec_hom(
    g: SignedGraph,
    h: SignedGraph,
    domains: Sequence[Sequence[int]] | None = None,
    budget: SearchBudget | None = None,
) -> Homomorphism | None:
    """Backtracking search for an ec homomorphism ``g -> h``.

    Vertices are assigned breadth-first from a maximum-degree root with
    ascending candidate order, and every assignment filters the candidate
    sets of the still-unassigned neighbors, so results are deterministic.
    ``domains`` optionally restricts the candidates of each source vertex.
    Raises :class:`BudgetExceededError` if ``budget`` runs out.
    """
    n = g.n
    if domains is None:
        doms: list[list[int]] = [list(range(h.n))] * n
    else:
        if len(domains) != n:
            raise ValueError("domains must list candidates for every vertex")
        doms = []
        for cand in domains:
            dom = sorted(set(cand))
            if any(not 0 <= c < h.n for c in dom):
                raise ValueError("candidate out of target range")
            doms.append(dom)

    order = _search_order(g)
    position = [0] * n
    for k, v in enumerate(order):
        position[v] = k
    # per search vertex: neighbors that come later in the order, with signs
    later: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for v in range(n):
        for w, s in g.neighbors(v).items():
            if position[w] > position[v]:
                later[v].append((w, s))

    hstat = [[h.status(a, b) for b in range(h.n)] for a in range(h.n)]
    current: list[list[int]] = [list(d) for d in doms]
    assignment = [-1] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for c in current[v]:
            if budget is not None:
                budget.spend()
            assignment[v] = c
            saved = []
            ok = True
            row = hstat[c]
            for w, s in later[v]:
                old = current[w]
                new = [d for d in old if row[d] == s]
                if not new:
                    ok = False
                    saved.append((w, old))
                    break
                saved.append((w, old))
                current[w] = new
            if ok and extend(k + 1):
                return True
            for w, old in saved:
                current[w] = old
            assignment[v] = -1
        return False

    if extend(0):
        return Homomorphism(tuple(assignment), kind="ec")
    return None


def _project_signed(rho_mapping: Sequence[int], base_n: int) -> Homomorphism:
    mapping = tuple(m % base_n for m in rho_mapping)
    switched = frozenset(v for v, m in enumerate(rho_mapping) if m >= base_n)
    return Homomorphism(mapping, kind="signed", switch_set=switched)


def ec_to_signed(hom: Homomorphism, base_n: int) -> Homomorphism:
    """Project an ec witness into a doubled target down to a signed witness.

    Vertices mapped into the minus copy (ids >= ``base_n``) form the switch
    set; images collapse to their identity in the base target.
    """
    if hom.kind != "ec":
        raise ValueError("expected an ec homomorphism into a doubled target")
    return _project_signed(hom.mapping, base_n)


def signed_to_ec(hom: Homomorphism, base_n: int) -> Homomorphism:
    """Lift a signed witness to an ec witness into the doubled target."""
    if hom.kind != "signed":
        raise ValueError("expected a signed homomorphism")
    mapping = tuple(
        m + base_n if v in hom.switch_set else m for v, m in enumerate(hom.mapping)
    )
    return Homomorphism(mapping, kind="ec")


def find_signed_hom(
    g: SignedGraph, h: SignedGraph, budget: SearchBudget | None = None
) -> Homomorphism | None:
    """Search for a signed homomorphism ``g -> h``.

    Runs the exact ec search into the antitwin doubling of ``h``; a source
    vertex mapped into the minus copy belongs to the switch witness, and its
    image projects to the corresponding vertex of ``h``.
    """
    rho = antitwin_double(h)
    found = find_ec_hom(g, rho.graph, budget=budget)
    if found is None:
        return None
    return _project_signed(found.mapping, h.n)


def verify_signed_with_mapping(
    g: SignedGraph,
    h: SignedGraph,
    mapping: Sequence[int],
    budget: SearchBudget | None = None,
) -> frozenset[int] | None:
    """Find a switch set making ``mapping`` an ec homomorphism, or None.

    The candidate images of each source vertex are restricted to the two
    copies of its prescribed target vertex in the antitwin doubling of ``h``,
    so only the switch choice is searched.
    """
    if len(mapping) != g.n:
        raise ValueError("mapping must be total on the source vertices")
    rho = antitwin_double(h)
    domains = [(m, m + h.n) for m in mapping]
    found = find_ec_hom(g, rho.graph, domains=domains, budget=budget)
    if found is None:
        return None
    return _project_signed(found.mapping, h.n).switch_set


# ---------------------------------------------------------------------------
# Complete signed targets of a given order, and the exact chromatic number.
# ---------------------------------------------------------------------------


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            idx[(i, j)] = k
            k += 1
    return idx


def complete_signed_graph(n: int, mask: int) -> SignedGraph:
    """Complete signed graph on ``n`` vertices from a signature bitmask.

    Pairs are ordered (0,1),(0,2),...,(0,n-1),(1,2),...; a set bit makes the
    pair negative.  Mask 0 is the all-positive complete graph.
    """
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((i, j, NEG if (mask >> k) & 1 else POS))
            k += 1
    return SignedGraph(n, edges)


def all_complete_targets(n: int):
    """All ``2^(n(n-1)/2)`` complete signed graphs on ``n`` vertices."""
    m = n * (n - 1) // 2
    for mask in range(1 << m):
        yield complete_signed_graph(n, mask)


@cache
def canonical_complete_targets(n: int) -> tuple[int, ...]:
    """Signature masks of complete signed targets, one per isomorphism class.

    The representative of each class is the minimum mask over all vertex
    permutations (negation and switching are *not* factored out; differently
    switched targets are distinct).  Computed by sweeping masks in increasing
    order and marking whole orbits, which reproduces the brute-force
    all-permutations minimum.
    """
    idx = _pair_index(n)
    m = n * (n - 1) // 2
    perm_maps = []
    for perm in permutations(range(n)):
        dst = [0] * m
        for (i, j), k in idx.items():
            a, b = perm[i], perm[j]
            dst[k] = idx[(a, b) if a < b else (b, a)]
        perm_maps.append(tuple(dst))
    seen = bytearray(1 << m)
    reps = []
    for sig in range(1 << m):
        if seen[sig]:
            continue
        reps.append(sig)
        for dst in perm_maps:
            t = 0
            rest = sig
            while rest:
                low = rest & -rest
                t |= 1 << dst[low.bit_length() - 1]
                rest ^= low
            seen[t] = 1
    return tuple(reps)


def signed_chromatic_number(
    g: SignedGraph, max_order: int, budget: SearchBudget | None = None
) -> tuple[int, SignedGraph, Homomorphism] | None:
    """Smallest target order admitting a signed homomorphism from ``g``.

    For each order ``1..max_order`` the canonical complete targets are tried
    in increasing signature order; the first hit is returned with its witness
    (order, target, homomorphism).  Returns None when no target of order up
    to ``max_order`` works, i.e. the chromatic number exceeds ``max_order``.
    Exact but exponential in the order; intended for ``max_order <= 6``.
    """
    for order in range(1, max_order + 1):
        for mask in canonical_complete_targets(order):
            h = complete_signed_graph(order, mask)
            found = find_signed_hom(g, h, budget=budget)
            if found is not None:
                return (order, h, found)
    return None


def induced_target(g: SignedGraph, mapping: Sequence[int], size: int) -> SignedGraph:
    """Target graph induced by a coloring: one edge per observed color pair.

    Raises ``ValueError`` if two source edges force the same color pair to
    carry both signs, or if an edge joins equal colors.
    """
    if len(mapping) != g.n:
        raise ValueError("mapping must be total on the source vertices")
    signs: dict[tuple[int, int], int] = {}
    for u, v, s in g.edges:
        a, b = mapping[u], mapping[v]
        if a == b:
            raise ValueError(f"edge ({u},{v}) joins two vertices of color {a}")
        key = (a, b) if a < b else (b, a)
        prev = signs.setdefault(key, s)
        if prev != s:
            raise ValueError(f"color pair {key} carries both signs")
    return SignedGraph(size, [(a, b, s) for (a, b), s in sorted(signs.items())])
