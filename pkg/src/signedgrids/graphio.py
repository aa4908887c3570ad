"""JSON and DOT serialization.

The JSON graph object is ``{"n": int, "edges": [[u, v, s], ...]}`` with
optional ``"labels"`` (list of strings) and ``"grid"`` metadata
(``{"kind": "hex"|"tri", "rows": R, "cols": C}`` plus an optional ``"mask"``
list of ``[i, j]`` cells).  Homomorphism witnesses serialize as
``{"mapping": [...], "switch": [...], "target": {graph}}``.

DOT output renders positive edges solid and negative edges dashed.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from .core import SignedGraph
from .grids import GridSpec
from .hom import Homomorphism


def grid_to_dict(spec: GridSpec) -> dict:
    out = {"kind": spec.kind, "rows": spec.rows, "cols": spec.cols}
    if spec.mask is not None:
        out["mask"] = sorted([i, j] for i, j in spec.mask)
    return out


def grid_from_dict(d: Mapping) -> GridSpec:
    mask = None
    if "mask" in d:
        mask = frozenset((int(i), int(j)) for i, j in d["mask"])
    return GridSpec(d["kind"], int(d["rows"]), int(d["cols"]), mask)


def graph_to_dict(g: SignedGraph) -> dict:
    out: dict = {"n": g.n, "edges": [[u, v, s] for u, v, s in g.edges]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    if isinstance(g.grid, GridSpec):
        out["grid"] = grid_to_dict(g.grid)
    return out


def graph_from_dict(d: Mapping) -> SignedGraph:
    edges = [(int(u), int(v), int(s)) for u, v, s in d["edges"]]
    labels = d.get("labels")
    grid = grid_from_dict(d["grid"]) if "grid" in d else None
    return SignedGraph(int(d["n"]), edges, labels=labels, grid=grid)


def hom_to_dict(hom: Homomorphism, target: SignedGraph) -> dict:
    return {
        "kind": hom.kind,
        "mapping": list(hom.mapping),
        "switch": sorted(hom.switch_set) if hom.switch_set is not None else [],
        "target": graph_to_dict(target),
    }


def hom_from_dict(d: Mapping) -> tuple[Homomorphism, SignedGraph]:
    target = graph_from_dict(d["target"])
    kind = d.get("kind", "signed")
    switch_set = frozenset(int(v) for v in d.get("switch", [])) if kind == "signed" else None
    hom = Homomorphism(tuple(int(m) for m in d["mapping"]), kind=kind, switch_set=switch_set)
    return hom, target


def graph_to_dot(
    g: SignedGraph,
    name: str = "G",
    annotations: Sequence[str] | None = None,
) -> str:
    """Render as graphviz source: solid edges positive, dashed negative.

    ``annotations``, when given, override the node labels (one per vertex).
    """
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        text = annotations[v] if annotations is not None else g.label(v)
        lines.append(f'  {v} [label="{text}"];')
    for u, v, s in g.edges:
        style = "solid" if s == 1 else "dashed"
        lines.append(f"  {u} -- {v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
