"""Command-line front end.

Every subcommand builds a ``Report``: human-readable lines plus a dict that
``--json`` prints instead. Exit codes are 0 on success, 1 on bad input and
2 when a construction or a check that must hold fails.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from collections import Counter
from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from .bases import verify_basis
from .bounds import fit_constant, recursion_bound
from .constants import (
    DEFAULT_FIT_RANGE,
    DEFAULT_G0,
    DEFAULT_TRIES,
    MAX_PLANARITY_VERTICES,
)
from .embedding import describe_surface, trace_faces, validate
from .exceptions import (
    PreconditionFailed,
    SeparatingCycle,
    SparseBasisError,
    TheoremViolation,
    UniverseMismatch,
)
from .fixtures import Fixture
from .io import dumps_basis, dumps_embedding, read_basis, read_embedding
from .methods import Method
from .oracle import PlanarityResult, brute_force_basis_number, is_planar
from .random_embedding import random_chi_zero_embedding, random_embedding
from .three_basis import three_basis

logger = logging.getLogger(__name__)

CONTRACT_ERRORS = (
    TheoremViolation,
    PreconditionFailed,
    SeparatingCycle,
    UniverseMismatch,
)
INPUT_ERRORS = (ValueError, SparseBasisError, OSError)


@dataclass
class Report:
    lines: list[str]
    data: dict
    code: int = 0


def _summary(e) -> tuple[str, dict]:
    faces = trace_faces(e)
    surface = describe_surface(e)
    data = {
        "faces": len(faces),
        "chi": surface.chi,
        "orientable": surface.orientable,
        "genus": surface.genus,
    }
    line = f"faces: {len(faces)}, chi: {surface.chi}, surface: {surface}"
    return line, data


def _write_or_print(text: str, output) -> list[str]:
    if output is None:
        return text.rstrip("\n").split("\n")
    with open(output, "w") as fh:
        fh.write(text)
    return [f"wrote {output}"]


def _planarity_data(result: PlanarityResult) -> dict:
    return {
        "planar": result.planar,
        "certificate": result.kuratowski_kind,
        "certificate_edges": (
            None
            if result.kuratowski_edges is None
            else list(result.kuratowski_edges)
        ),
    }


def _planarity_line(result: PlanarityResult) -> str:
    if result.planar:
        return "planar: true"
    return (
        f"planar: false ({result.kuratowski_kind} certificate, "
        f"{len(result.kuratowski_edges)} edges)"
    )


def cmd_validate(args) -> Report:
    e = read_embedding(args.path, check=False)
    violations = validate(e)
    if violations:
        return Report(
            ["valid: false", *(f"  {v}" for v in violations)],
            {"valid": False, "violations": violations},
            code=1,
        )
    line, data = _summary(e)
    if e.expected_chi is not None and e.expected_chi != data["chi"]:
        message = f"declared chi {e.expected_chi}, traced {data['chi']}"
        return Report(
            ["valid: false", f"  {message}"],
            {"valid": False, "violations": [message]},
            code=1,
        )
    return Report(["valid: true", line], {"valid": True, **data})


def cmd_faces(args) -> Report:
    e = read_embedding(args.path)
    faces = trace_faces(e)
    lines, walks = [], []
    for i in range(len(faces)):
        vertices, edges = faces.vertices(i), faces.edges(i)
        walks.append({"vertices": list(vertices), "edges": list(edges)})
        lines.append(
            f"face {i}: {' '.join(map(str, vertices))} "
            f"| edges {' '.join(map(str, edges))}"
        )
    line, data = _summary(e)
    return Report([*lines, line], {**data, "walks": walks})


def cmd_euler(args) -> Report:
    _, data = _summary(read_embedding(args.path))
    return Report([f"chi: {data['chi']}"], {"chi": data["chi"]})


def cmd_surface(args) -> Report:
    surface = describe_surface(read_embedding(args.path))
    return Report(
        [f"surface: {surface} ({surface.name})"],
        {
            "orientable": surface.orientable,
            "genus": surface.genus,
            "chi": surface.chi,
            "name": surface.name,
        },
    )


def cmd_basis(args) -> Report:
    e = read_embedding(args.path)
    method = Method[args.method.upper()]
    result = method(e)
    is_basis, k = result.basis.verify()
    if not is_basis:
        raise TheoremViolation(f"{method.name} output is not a cycle basis")
    case = None if result.witness is None else result.witness.case_tag.value
    text = dumps_basis(result.basis, e.name, result.witness)
    lines = [
        f"dimension: {len(result.basis)}, sparsity: {k}, "
        f"case: {case or '-'}"
    ]
    if args.output is not None:
        lines += _write_or_print(text, args.output)
    data = {
        "dimension": len(result.basis),
        "sparsity": k,
        "case": case,
        "basis": json.loads(text),
    }
    return Report(lines, data)


def cmd_verify(args) -> Report:
    g = read_embedding(args.graph).graph
    universe, elements, _ = read_basis(args.basis)
    if universe != g.edge_count:
        raise UniverseMismatch(
            f"basis is over {universe} edges, graph has {g.edge_count}"
        )
    is_basis, k = verify_basis(g, elements)
    data = {"is_basis": is_basis, "dimension": len(elements), "sparsity": k}
    line = (
        f"is_basis: {str(is_basis).lower()}, "
        f"dimension: {len(elements)}, sparsity: {k}"
    )
    return Report([line], data, code=0 if is_basis else 2)


def cmd_oracle(args) -> Report:
    g = read_embedding(args.path).graph
    k = brute_force_basis_number(g, args.max_k)
    planarity = is_planar(g)
    return Report(
        [f"basis number: {k}", _planarity_line(planarity)],
        {"basis_number": k, **_planarity_data(planarity)},
    )


def cmd_planar(args) -> Report:
    planarity = is_planar(read_embedding(args.path).graph)
    return Report([_planarity_line(planarity)], _planarity_data(planarity))


def cmd_bound(args) -> Report:
    trace = recursion_bound(args.genus, args.g0)
    lines = ["step  genus  bound"]
    lines += [
        f"{i:>4}  {g:>5}  {b:>5}"
        for i, (g, b) in enumerate(zip(trace.genera, trace.bounds))
    ]
    m = fit_constant(DEFAULT_FIT_RANGE, args.g0)
    lines.append(f"final bound: {trace.final_bound}, M: {m:.4f}")
    data = {
        "genera": list(trace.genera),
        "bounds": list(trace.bounds),
        "final_bound": trace.final_bound,
        "g0": trace.g0,
        "m": m,
    }
    if args.genus >= 2:
        scale = m * math.log2(args.genus) ** 2
        lines.append(
            f"{trace.final_bound} <= M log2(g)^2 = {scale:.2f}, "
            f"ratio {trace.ratio:.4f}"
        )
        data["m_log2_squared"] = scale
        data["ratio"] = trace.ratio
    return Report(lines, data)


def cmd_randgen(args) -> Report:
    rng = np.random.default_rng(args.seed)
    e = random_embedding(
        args.vertices,
        args.edges,
        rng,
        target_chi=args.target_chi,
        tries=args.tries,
        name=f"random-{args.seed}",
    )
    data = {"chi": args.target_chi, "planar": None}
    lines = []
    if args.target_chi == 0 and e.graph.vertex_count <= MAX_PLANARITY_VERTICES:
        data["planar"] = is_planar(e.graph).planar
        lines.append(f"planar: {str(data['planar']).lower()}")
    text = dumps_embedding(e)
    lines += _write_or_print(text, args.output)
    data["embedding"] = json.loads(text)
    return Report(lines, data)


def cmd_stress(args) -> Report:
    rng = np.random.default_rng(args.seed)
    cases = Counter()
    failures = []
    for i in tqdm(range(args.count), desc="stress", disable=args.json):
        e = random_chi_zero_embedding(rng, tries=args.tries)
        try:
            basis, witness = three_basis(e)
            is_basis, k = basis.verify()
            if not is_basis or k > 3:
                raise TheoremViolation(
                    f"is_basis {is_basis}, sparsity {k}", witness.as_dict()
                )
        except CONTRACT_ERRORS as err:
            logger.warning("embedding %d failed: %s", i, err)
            failures.append({"index": i, "error": str(err)})
            continue
        cases[witness.case_tag.value] += 1
    lines = [f"{case}: {count}" for case, count in sorted(cases.items())]
    lines.append(f"failures: {len(failures)}")
    return Report(
        lines,
        {"cases": dict(sorted(cases.items())), "failures": failures},
        code=2 if failures else 0,
    )


def cmd_fixture(args) -> Report:
    e = Fixture.from_name(args.name)()
    text = dumps_embedding(e)
    return Report(
        _write_or_print(text, args.output), {"embedding": json.loads(text)}
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="print machine-readable JSON"
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for INFO, -vv for DEBUG logging",
    )
    parser = argparse.ArgumentParser(
        prog="sparse-cycle-basis",
        description="Sparse cycle bases of graphs embedded on surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    for name, handler, help_text in (
        ("validate", cmd_validate, "check an embedded-graph file"),
        ("faces", cmd_faces, "list the face walks"),
        ("euler", cmd_euler, "print the Euler characteristic"),
        ("surface", cmd_surface, "name the surface"),
        ("planar", cmd_planar, "planarity with a certificate"),
    ):
        add(name, handler, help_text).add_argument("path")

    p = add("basis", cmd_basis, "build a sparse cycle basis")
    p.add_argument("path")
    p.add_argument(
        "--method",
        choices=[m.name.lower() for m in Method],
        default="auto",
    )
    p.add_argument("--output", help="basis file to write")

    p = add("verify", cmd_verify, "check a basis file against a graph")
    p.add_argument("graph")
    p.add_argument("basis")

    p = add("oracle", cmd_oracle, "exact basis number by exhaustive search")
    p.add_argument("path")
    p.add_argument("--max-k", type=int, default=4)

    p = add("bound", cmd_bound, "iterate the logarithmic genus recursion")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--g0", type=int, default=DEFAULT_G0)

    p = add("randgen", cmd_randgen, "random embedding with a given chi")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target-chi", type=int, default=0)
    p.add_argument("--tries", type=int, default=DEFAULT_TRIES)
    p.add_argument("--output", help="embedded-graph file to write")

    p = add("stress", cmd_stress, "three-bases of random chi=0 embeddings")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tries", type=int, default=DEFAULT_TRIES)

    p = add("fixture", cmd_fixture, "write a named embedded graph")
    p.add_argument("name", choices=Fixture.names())
    p.add_argument("--output", help="embedded-graph file to write")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.data, sort_keys=True, default=str))
    else:
        print("\n".join(report.lines))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        report = args.handler(args)
    except CONTRACT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        witness = getattr(err, "witness", None)
        if witness:
            print(
                json.dumps(witness, sort_keys=True, default=str),
                file=sys.stderr,
            )
        return 2
    except (*INPUT_ERRORS, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    _emit(report, args.json)
    return report.code
