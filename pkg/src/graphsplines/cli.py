"""Command-line front end.

Subcommands: verify, flowup, q, check-basis, search, obstruct, probe.
Exit status is 0 on affirmative verdicts (UNDECIDED included), 1 on negative
verdicts, and 2 on errors. Reports are human-readable by default and
machine-readable with --json; both carry identical verdicts.
"""

from __future__ import annotations

import argparse
import json
import sys

from .basis import (
    Provenance,
    SplineMatrix,
    c3_flowup_obstruction,
    check_basis,
    compute_q,
    cramer_membership,  # noqa: F401  (re-exported for scripting convenience)
    divides_all_dets_probe,
    even_constant_term,
    spline_determinant,
    zero_constant_term,
)
from .errors import SplineAlgebraError
from .graphs import LabeledGraph, load_graph
from .lattice import integer_flow_up_basis
from .search import flow_up_search_bounded
from .splines import flow_up_witness, is_spline

DEFAULT_SEED = 12345
DEFAULT_TRIALS = 500


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsplines",
        description="Exact computation with generalized splines on edge-labeled graphs.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def subcommand(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("graph", help="path to a graph JSON document")
        sub.add_argument("--json", action="store_true", help="machine-readable report")
        sub.add_argument(
            "--vertex-order",
            help="comma-separated permutation of the vertex names to use",
        )
        return sub

    sub = subcommand("verify", "check whether a vertex labeling is a spline")
    sub.add_argument(
        "--spline", required=True, help="comma-separated entries, one per vertex"
    )

    subcommand(
        "flowup",
        "flow-up class basis over the integers, or a witness table otherwise",
    )

    subcommand("q", "the Q invariant with its provenance")

    sub = subcommand("check-basis", "determinantal basis check of candidate columns")
    sub.add_argument(
        "--spline",
        action="append",
        required=True,
        help="one candidate column (repeat the flag, once per column)",
    )

    sub = subcommand("search", "bounded search for a flow-up class basis")
    sub.add_argument(
        "--factors",
        required=True,
        help="semicolon-separated factor multiset of the label product",
    )
    sub.add_argument(
        "--degree", required=True, type=int, help="total degree bound for entries"
    )

    sub = subcommand("obstruct", "3-cycle flow-up obstruction test")
    sub.add_argument(
        "--ideal",
        choices=["even-constant-term", "zero-constant-term"],
        help="membership predicate for the ideal generated by the last two labels "
        "(default: even-constant-term over integer coefficients, "
        "zero-constant-term over rational coefficients)",
    )

    sub = subcommand("probe", "randomized q-divides-all-determinants probe")
    sub.add_argument("--q", help="divisor to probe (default: the computed Q invariant)")
    sub.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)

    return parser


def _load(args) -> LabeledGraph:
    with open(args.graph, encoding="utf-8") as handle:
        graph = load_graph(handle.read())
    if args.vertex_order:
        names = [name.strip() for name in args.vertex_order.split(",")]
        graph = graph.reorder(names)
    return graph


def _parse_spline(graph: LabeledGraph, text: str) -> tuple:
    entries = [graph.ring.element_from_text(piece.strip()) for piece in text.split(",")]
    if len(entries) != graph.n:
        raise ValueError(
            f"spline has {len(entries)} entries; the graph has {graph.n} vertices"
        )
    return tuple(entries)


def _spline_text(graph: LabeledGraph, spline) -> str:
    return "(" + ", ".join(graph.ring.to_text(entry) for entry in spline) + ")"


def _cmd_verify(args):
    graph = _load(args)
    candidate = _parse_spline(graph, args.spline)
    check = is_spline(graph, candidate)
    lines = [f"graph: {graph.describe()}", f"candidate: {_spline_text(graph, candidate)}"]
    lines.append(f"SPLINE: {'yes' if check.ok else 'no'}")
    violations = []
    for violation in check.violations:
        lines.append(f"  violated {violation}")
        violations.append(
            {
                "edge": violation.edge_index,
                "u": violation.u,
                "v": violation.v,
                "label": violation.label_text,
            }
        )
    report = {
        "command": "verify",
        "verdict": "yes" if check.ok else "no",
        "violations": violations,
    }
    return (0 if check.ok else 1), report, lines


def _cmd_flowup(args):
    graph = _load(args)
    ring = graph.ring
    lines = [f"graph: {graph.describe()}"]
    if ring.kind == "int":
        basis = integer_flow_up_basis(graph)
        lines.append("flow-up class basis (columns):")
        for k, column in enumerate(basis.columns):
            lines.append(f"  B{k + 1} = {_spline_text(graph, column)}")
        lines.append(f"diagonal: {basis.diagonal}")
        lines.append(f"determinant: {basis.determinant}")
        report = {"command": "flowup", "verdict": "yes", **basis.to_document()}
        return 0, report, lines
    lines.append("flow-up witness table (one representative per nonzero class):")
    witnesses = [tuple(ring.one for _ in range(graph.n))]
    lines.append(f"  class 0: {_spline_text(graph, witnesses[0])} (constant spline)")
    for index in range(1, graph.n):
        witness = flow_up_witness(graph, index)
        witnesses.append(witness)
        lines.append(f"  class {index}: {_spline_text(graph, witness)}")
    report = {
        "command": "flowup",
        "verdict": "yes",
        "witnesses": [[ring.to_text(entry) for entry in w] for w in witnesses],
    }
    return 0, report, lines


def _cmd_q(args):
    graph = _load(args)
    invariant = compute_q(graph)
    lines = [f"graph: {graph.describe()}"]
    lines.append(
        f"Q = {graph.ring.to_text(invariant.value)} "
        f"(provenance: {invariant.provenance.value})"
    )
    if invariant.provenance is Provenance.LCM_LOWER_BOUND:
        lines.append(
            "note: this Q only divides every n-subset determinant; "
            "basis checks against it are one-directional"
        )
    report = {
        "command": "q",
        "verdict": "yes",
        "q": graph.ring.to_text(invariant.value),
        "provenance": invariant.provenance.value,
    }
    return 0, report, lines


def _cmd_check_basis(args):
    graph = _load(args)
    columns = [_parse_spline(graph, text) for text in args.spline]
    matrix = SplineMatrix(graph, columns)
    invariant = compute_q(graph)
    verdict = check_basis(matrix, invariant)
    if verdict.is_basis is True:
        word, code = "yes", 0
    elif verdict.is_basis is False:
        word, code = "no", 1
    else:
        word, code = "UNDECIDED", 0
    ring = graph.ring
    lines = [f"graph: {graph.describe()}"]
    lines.append(f"determinant: {ring.to_text(verdict.determinant)}")
    lines.append(f"Q = {ring.to_text(invariant.value)} ({invariant.provenance.value})")
    lines.append(f"BASIS: {word}" + (f" (unit {ring.to_text(verdict.unit_factor)})" if verdict.is_basis else ""))
    if verdict.is_basis is not True:
        lines.append(f"  reason: {verdict.reason}")
    report = {
        "command": "check-basis",
        "verdict": word,
        "determinant": ring.to_text(verdict.determinant),
        "q": ring.to_text(invariant.value),
        "provenance": invariant.provenance.value,
        "unit": ring.to_text(verdict.unit_factor) if verdict.is_basis else None,
        "reason": verdict.reason,
    }
    return code, report, lines


def _cmd_search(args):
    graph = _load(args)
    ring = graph.ring
    factors = [
        ring.element_from_text(piece.strip()) for piece in args.factors.split(";")
    ]
    outcome = flow_up_search_bounded(graph, factors, args.degree)
    lines = [f"graph: {graph.describe()}"]
    if outcome.found:
        lines.append("flow-up class basis found:")
        for k, column in enumerate(outcome.basis.columns):
            lines.append(f"  B{k + 1} = {_spline_text(graph, column)}")
        determinant = spline_determinant(outcome.basis)
        lines.append(f"determinant: {ring.to_text(determinant)}")
        report = {
            "command": "search",
            "verdict": "yes",
            "degree_bound": outcome.degree_bound,
            "determinant": ring.to_text(determinant),
            **outcome.basis.to_document(),
        }
        return 0, report, lines
    lines.append(
        f"NONEXISTENT({outcome.degree_bound}): no flow-up class basis with entry "
        f"degrees <= {outcome.degree_bound}"
    )
    lines.append(
        f"  covered {outcome.assignments_total} factor assignments "
        f"({outcome.systems_checked} distinct leading-term systems, all infeasible)"
    )
    report = {
        "command": "search",
        "verdict": "no",
        "degree_bound": outcome.degree_bound,
        "assignments_total": outcome.assignments_total,
        "systems_checked": outcome.systems_checked,
    }
    return 1, report, lines


def _triangle_labels(graph: LabeledGraph):
    """Labels of a 3-cycle in role order: (v1~v2, v2~v3, v3~v1)."""
    if graph.n != 3 or len(graph.edges) != 3:
        raise ValueError("the obstruction test needs a 3-cycle graph")
    roles = {}
    for edge in graph.edges:
        key = frozenset((edge.u, edge.v))
        if key in roles:
            raise ValueError("the obstruction test needs three distinct edges")
        roles[key] = edge.label
    try:
        return (
            roles[frozenset((0, 1))],
            roles[frozenset((1, 2))],
            roles[frozenset((2, 0))],
        )
    except KeyError:
        raise ValueError("the obstruction test needs a 3-cycle graph") from None


def _cmd_obstruct(args):
    graph = _load(args)
    ring = graph.ring
    if ring.kind != "poly":
        raise ValueError("the obstruction test is for polynomial rings")
    a, b, c = _triangle_labels(graph)
    choice = args.ideal
    if choice is None:
        choice = (
            "even-constant-term" if ring.coeff_kind == "int" else "zero-constant-term"
        )
    predicate = (
        even_constant_term if choice == "even-constant-term" else zero_constant_term
    )
    obstructed = c3_flowup_obstruction(ring, a, b, c, predicate)
    lines = [f"graph: {graph.describe()}"]
    lines.append(
        f"labels in role order: a={ring.to_text(a)}, b={ring.to_text(b)}, "
        f"c={ring.to_text(c)}; ideal test: {choice}"
    )
    if obstructed:
        lines.append(
            "OBSTRUCTED: yes (a is outside the ideal generated by b and c; "
            "no flow-up class basis exists)"
        )
    else:
        lines.append("OBSTRUCTED: no (the ideal test accepts a)")
    report = {
        "command": "obstruct",
        "verdict": "yes" if obstructed else "no",
        "ideal_test": choice,
    }
    return (0 if obstructed else 1), report, lines


def _cmd_probe(args):
    graph = _load(args)
    ring = graph.ring
    if args.q is not None:
        q_value = ring.element_from_text(args.q)
    else:
        q_value = compute_q(graph).value
    result = divides_all_dets_probe(graph, q_value, args.trials, args.seed)
    lines = [f"graph: {graph.describe()}"]
    lines.append(f"q = {ring.to_text(q_value)}, trials = {args.trials}, seed = {args.seed}")
    report = {
        "command": "probe",
        "q": ring.to_text(q_value),
        "trials": result.trials,
        "seed": args.seed,
    }
    if result.ok:
        lines.append(f"PROBE: ok (q divides all {result.trials} sampled determinants)")
        report["verdict"] = "yes"
        return 0, report, lines
    lines.append(f"PROBE: counterexample found on trial {result.trials}:")
    for k, column in enumerate(result.counterexample):
        lines.append(f"  C{k + 1} = {_spline_text(graph, column)}")
    report["verdict"] = "no"
    report["counterexample"] = [
        [ring.to_text(entry) for entry in column] for column in result.counterexample
    ]
    return 1, report, lines


_HANDLERS = {
    "verify": _cmd_verify,
    "flowup": _cmd_flowup,
    "q": _cmd_q,
    "check-basis": _cmd_check_basis,
    "search": _cmd_search,
    "obstruct": _cmd_obstruct,
    "probe": _cmd_probe,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report, lines = _HANDLERS[args.command](args)
    except (SplineAlgebraError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
