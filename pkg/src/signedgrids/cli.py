"""Command-line interface.

Subcommands: ``gen``, ``color``, ``verify``, ``props``, ``chromatic``,
``lowerbounds``, ``motif``.  Every artifact embeds the tool version and the
full configuration that produced it, and identical invocations write
byte-identical files.  Exit codes: 0 success, 1 usage error, 2 verification
failure, 3 budget exhausted / unknown.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import __version__
from .colorers import color_hex, color_tri
from .core import (
    SignedGraph,
    build_SP9,
    build_T4,
    rho_sp9_plus,
    rho_t4,
    sp5_plus,
    sp9_plus,
    switch,
)
from .graphio import graph_from_dict, graph_to_dict, graph_to_dot, hom_from_dict, hom_to_dict
from .grids import GridSpec, all_c4_unbalanced_grid, make_grid, random_signature, unbalanced_c6, unbalanced_wheel7
from .hom import (
    BudgetExceededError,
    SearchBudget,
    all_complete_targets,
    canonical_complete_targets,
    complete_signed_graph,
    ec_to_signed,
    find_signed_hom,
    signed_chromatic_number,
    verify_ec,
)
from .props import (
    automorphisms,
    check_antiautomorphic,
    check_pkn,
    check_pstar21,
    check_transitivity,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_UNKNOWN = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".signedgrids-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(path: str | None, payload: dict, command: str, config: dict) -> None:
    artifact = {
        "tool": "signedgrids",
        "version": __version__,
        "command": command,
        "config": config,
    }
    artifact.update(payload)
    text = json.dumps(artifact, indent=2, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        _write_atomic(path, text)


def _load_graph(path: str) -> SignedGraph:
    with open(path) as fh:
        data = json.load(fh)
    return graph_from_dict(data["graph"] if "graph" in data else data)


def cmd_gen(args) -> int:
    spec = GridSpec(args.kind, args.rows, args.cols)
    sig = random_signature(spec, args.seed, args.p_neg)
    g = make_grid(spec, sig)
    config = {
        "kind": args.kind,
        "rows": args.rows,
        "cols": args.cols,
        "seed": args.seed,
        "p_neg": args.p_neg,
    }
    _emit(args.output, {"graph": graph_to_dict(g)}, "gen", config)
    return EXIT_OK


_TARGET_NAMES = {"hex": "T4", "tri": "SP9+"}


def cmd_color(args) -> int:
    g = _load_graph(args.input)
    if not isinstance(g.grid, GridSpec):
        print("color: input file carries no grid metadata", file=sys.stderr)
        return EXIT_USAGE
    kind = g.grid.kind
    if kind == "hex":
        ec_hom = color_hex(g)
        base = build_T4()
        rho = rho_t4()
    else:
        ec_hom, _trace = color_tri(g)
        base = sp9_plus()
        rho = rho_sp9_plus()
    if not verify_ec(g, rho.graph, ec_hom.mapping):
        print("color: certificate failed independent verification", file=sys.stderr)
        return EXIT_VERIFY
    signed = ec_to_signed(ec_hom, base.n)
    identities = len(set(signed.mapping))
    config = {"input": args.input}
    payload = {
        "target_name": _TARGET_NAMES[kind],
        "identities_used": identities,
        "certificate": hom_to_dict(signed, base),
    }
    _emit(args.output, payload, "color", config)
    if args.dot:
        marks = [
            f"{base.label(signed.mapping[v])}{'*' if v in signed.switch_set else ''}"
            for v in range(g.n)
        ]
        _write_atomic(args.dot, graph_to_dot(g, annotations=marks))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    with open(args.certificate) as fh:
        cert = json.load(fh)
    hom, target = hom_from_dict(cert["certificate"] if "certificate" in cert else cert)
    if hom.kind == "signed":
        ok = verify_ec(switch(g, hom.switch_set), target, hom.mapping)
    else:
        ok = verify_ec(g, target, hom.mapping)
    print("certificate OK" if ok else "certificate REJECTED")
    return EXIT_OK if ok else EXIT_VERIFY


def _report_to_dict(report) -> dict:
    return {
        "name": report.name,
        "holds": report.holds,
        "counterexamples": [
            {"tuple": list(t), "signs": list(a) if a else None, "count": c}
            for t, a, c in report.counterexamples
        ],
    }


def cmd_props(args) -> int:
    if args.target == "rhoT4":
        atg = rho_t4()
        g = atg.graph
        reports = [check_pkn(g, 1, 3), check_pstar21(atg)]
    elif args.target == "rhoSP9plus":
        g = rho_sp9_plus().graph
        autos = list(automorphisms(g))
        reports = [
            check_pkn(g, 1, 9),
            check_pkn(g, 2, 4),
            check_pkn(g, 3, 1),
            check_transitivity(g, 1, autos=autos),
            check_transitivity(g, 2, autos=autos),
        ]
        anti = check_antiautomorphic(g)
        payload = {
            "reports": [_report_to_dict(r) for r in reports],
            "antiautomorphic": anti is not None,
            "all_hold": all(r.holds for r in reports) and anti is not None,
        }
        _emit(args.output, payload, "props", {"target": args.target})
        return EXIT_OK
    elif args.target == "SP9":
        anti = check_antiautomorphic(build_SP9())
        payload = {"reports": [], "antiautomorphic": anti is not None, "all_hold": anti is not None}
        _emit(args.output, payload, "props", {"target": args.target})
        return EXIT_OK
    else:
        print(f"props: unknown target {args.target}", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "reports": [_report_to_dict(r) for r in reports],
        "all_hold": all(r.holds for r in reports),
    }
    _emit(args.output, payload, "props", {"target": args.target})
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = _load_graph(args.input)
    budget = SearchBudget(args.budget) if args.budget is not None else None
    config = {"input": args.input, "max_order": args.max_order, "budget": args.budget}
    try:
        result = signed_chromatic_number(g, args.max_order, budget=budget)
    except BudgetExceededError:
        _emit(args.output, {"status": "unknown"}, "chromatic", config)
        return EXIT_UNKNOWN
    if result is None:
        payload = {"status": "none", "max_order": args.max_order}
    else:
        order, target, hom = result
        payload = {
            "status": "found",
            "order": order,
            "witness": hom_to_dict(hom, target),
        }
    _emit(args.output, payload, "chromatic", config)
    return EXIT_OK


def cmd_lowerbounds(args) -> int:
    budget = SearchBudget(args.budget) if args.budget is not None else None
    config = {"instance": args.instance, "budget": args.budget}
    try:
        if args.instance == "c6":
            g = unbalanced_c6()
            admitting = [
                mask
                for mask in range(8)
                if find_signed_hom(g, complete_signed_graph(3, mask), budget=budget)
            ]
            t4_hom = find_signed_hom(g, build_T4(), budget=budget)
            conclusion = (
                "no target of order 3; order-4 witness T4 => chromatic number = 4"
                if not admitting and t4_hom
                else "unexpected"
            )
            payload = {
                "order3_admitting": admitting,
                "order4_T4_admits": t4_hom is not None,
                "conclusion": conclusion,
            }
            lines = [conclusion]
        else:
            g = unbalanced_wheel7()
            admitting5 = 0
            for h in all_complete_targets(5):
                if find_signed_hom(g, h, budget=budget):
                    admitting5 += 1
            witness6 = None
            for mask in canonical_complete_targets(6):
                h = complete_signed_graph(6, mask)
                found = find_signed_hom(g, h, budget=budget)
                if found is not None:
                    witness6 = (mask, found)
                    break
            payload = {
                "order5_admitting_count": admitting5,
                "order6_witness_mask": witness6[0] if witness6 else None,
                "conclusion": (
                    "no target of order 5; order-6 witness found => chromatic number = 6"
                    if admitting5 == 0 and witness6
                    else "unexpected"
                ),
            }
            lines = [payload["conclusion"]]
    except BudgetExceededError:
        _emit(args.output, {"status": "unknown"}, "lowerbounds", config)
        return EXIT_UNKNOWN
    _emit(args.output, payload, "lowerbounds", config)
    for line in lines:
        print(line)
    return EXIT_OK


def cmd_motif(args) -> int:
    g, coloring = all_c4_unbalanced_grid(args.rows, args.cols)
    target = sp5_plus()
    config = {"rows": args.rows, "cols": args.cols}
    payload = {
        "graph": graph_to_dict(g),
        "coloring": [coloring[v] for v in range(g.n)],
        "target": graph_to_dict(target),
    }
    _emit(args.output, payload, "motif", config)
    if args.dot:
        marks = [str(coloring[v]) for v in range(g.n)]
        _write_atomic(args.dot, graph_to_dot(g, annotations=marks))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="signedgrids", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random signed grid")
    p.add_argument("--kind", choices=("hex", "tri"), required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-neg", type=float, default=0.5, dest="p_neg")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="color a grid and emit a verified certificate")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--dot", default=None)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="re-check a certificate against a graph")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-c", "--certificate", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("props", help="run the target property suites")
    p.add_argument("--target", choices=("rhoT4", "rhoSP9plus", "SP9"), required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("chromatic", help="exact chromatic number by target sweep")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--max-order", type=int, default=6, dest="max_order")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("lowerbounds", help="run the fixed lower-bound sweeps")
    p.add_argument("--instance", choices=("c6", "wheel7"), required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_lowerbounds)

    p = sub.add_parser("motif", help="emit the periodic all-unbalanced triangular fixture")
    p.add_argument("--rows", type=int, default=12)
    p.add_argument("--cols", type=int, default=12)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--dot", default=None)
    p.set_defaults(func=cmd_motif)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError:
        return EXIT_UNKNOWN
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"signedgrids: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
