"""JSON files for embedded graphs and cycle bases.

Embedded graph::

    {
      "name": "k5_torus",
      "vertices": 5,
      "edges": [[0, 1], [0, 2], ...],
      "rotation": [[[0, 0], [1, 0], ...], ...],
      "signs": [1, 1, ...],
      "chi": 0
    }

``rotation[v]`` lists the darts ``[edge, end]`` around vertex ``v``; end 0
is the first endpoint of the edge. ``chi`` is optional.

Cycle basis::

    {
      "graph": "k5_torus",
      "edges": 10,
      "elements": [[0, 1, 4], ...],
      "labels": ["face 0", ..., "modified x+h", "modified y+k"],
      "witness": {...}
    }

``witness`` is present for three-bases built by replacement.
"""
from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path
from typing import Optional

from .bases import BasisLabel, CycleBasis
from .cycle_space import EdgeVector
from .embedding import Dart, EmbeddedGraph
from .exceptions import FormatError
from .graph import Multigraph
from .replacement import ReplacementWitness

EMBEDDING_FIELDS = ("name", "vertices", "edges", "rotation", "signs", "chi")


def _render(fields: dict) -> str:
    """One top-level field per line, values compact."""
    lines = [
        f"  {json.dumps(key)}: {json.dumps(value)}"
        for key, value in fields.items()
    ]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _parse(text: str, source: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"{source}: {err}") from err
    if not isinstance(data, dict):
        raise FormatError(f"{source}: expected a JSON object")
    return data


def embedding_to_dict(e: EmbeddedGraph) -> dict:
    fields = {
        "name": e.name,
        "vertices": e.graph.vertex_count,
        "edges": [list(pair) for pair in e.graph.edges],
        "rotation": [[list(d) for d in darts] for darts in e.rotation],
        "signs": list(e.signs),
    }
    if e.expected_chi is not None:
        fields["chi"] = e.expected_chi
    return fields


def dumps_embedding(e: EmbeddedGraph) -> str:
    return _render(embedding_to_dict(e))


def embedding_from_dict(
    data: dict, check: bool = True, source: str = "<embedding>"
) -> EmbeddedGraph:
    """Build an embedding from parsed JSON.

    Raises
    ------
    FormatError
        A field is missing or has the wrong shape.
    InvalidGraph, InvalidEmbedding, ChiMismatch
        The content does not describe a valid embedding (``check`` only
        affects the embedding invariants).
    """
    required = ("vertices", "edges", "rotation", "signs")
    missing = [k for k in required if k not in data]
    if missing:
        raise FormatError(f"{source}: missing fields {missing}")
    unknown = sorted(set(data) - set(EMBEDDING_FIELDS))
    if unknown:
        raise FormatError(f"{source}: unknown fields {unknown}")
    try:
        vertices = int(data["vertices"])
        edges = tuple((int(u), int(v)) for u, v in data["edges"])
        rotation = tuple(
            tuple(Dart(int(edge), int(end)) for edge, end in darts)
            for darts in data["rotation"]
        )
        signs = tuple(int(s) for s in data["signs"])
    except (TypeError, ValueError) as err:
        raise FormatError(f"{source}: {err}") from err
    chi = data.get("chi")
    return EmbeddedGraph(
        Multigraph(vertices, edges),
        rotation,
        signs,
        name=str(data.get("name", "")),
        expected_chi=None if chi is None else int(chi),
        check=check,
    )


def loads_embedding(text: str, check: bool = True) -> EmbeddedGraph:
    return embedding_from_dict(_parse(text, "<string>"), check=check)


def read_embedding(path, check: bool = True) -> EmbeddedGraph:
    path = Path(path)
    return embedding_from_dict(
        _parse(path.read_text(), str(path)), check=check, source=str(path)
    )


def write_embedding(e: EmbeddedGraph, path) -> None:
    Path(path).write_text(dumps_embedding(e))


def dumps_basis(
    basis: CycleBasis,
    name: str = "",
    witness: Optional[ReplacementWitness] = None,
) -> str:
    fields = {
        "graph": name,
        "edges": basis.graph.edge_count,
        "elements": [list(v.edges()) for v in basis],
        "labels": [str(label) for label in basis.labels],
    }
    if witness is not None:
        fields["witness"] = witness.as_dict()
    return _render(fields)


def write_basis(
    basis: CycleBasis,
    path,
    name: str = "",
    witness: Optional[ReplacementWitness] = None,
) -> None:
    Path(path).write_text(dumps_basis(basis, name, witness))


def read_basis(path) -> tuple[int, list[EdgeVector], list[BasisLabel]]:
    """Universe size, elements and labels of a basis file.

    Raises
    ------
    FormatError
        The file is not a basis file.
    """
    path = Path(path)
    data = _parse(path.read_text(), str(path))
    try:
        universe = int(data["edges"])
        elements = [
            EdgeVector.from_edges(universe, (int(e) for e in edges))
            for edges in data["elements"]
        ]
        raw_labels: Sequence[str] = data.get("labels") or []
        labels = [BasisLabel.parse(str(text)) for text in raw_labels]
    except (KeyError, TypeError, ValueError, IndexError) as err:
        raise FormatError(f"{path}: {err}") from err
    return universe, elements, labels
