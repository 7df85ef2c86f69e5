"""JSON frame files.

A frame file is an object with these members::

    {
      "algebra":   {"kind": "lukasiewicz" | "goedel", "size": n}
                 | {"kind": "table", "carrier": [...], "order": [[a, b], ...],
                    "otimes": [[...]], "residuum": [[...]]},
      "nodes":     ["z1", "z2", ...],
      "E":         [["1", "0.2", ...], ...],            # |Z| x |Z|, reflexive
      "relations": {"L": {"box": [[...]], "dia": [[...]]}, ...},
      "valuations": {"p": [[...], ...]},               # |carrier| x |Z|
      "close":     false,
      "meta":      {...}                               # kept verbatim
    }

Truth values are strings: ``"k/d"`` fractions or decimals for the chain
families (parsed exactly) and carrier labels for table algebras.  A missing
``"dia"`` defaults to the converse of ``"box"``; an explicit ``null`` leaves
the role out.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .algebra import (
    AlgebraError,
    AlgebraValidationError,
    TruthAlgebra,
    make_goedel_chain,
    make_lukasiewicz_chain,
    make_table_algebra,
)
from .graph import AGraph, GraphError, GraphFrame, RelationPair
from .model import Model, make_valuation
from .mvsets import ARelation, Index
from .polarity import CompatibilityError

__all__ = ["FrameFileError", "LoadedFrame", "algebra_from_spec", "dump_frame", "load_frame",
           "load_frame_document", "save_frame"]


class FrameFileError(ValueError):
    def __init__(self, pointer: str, message: str):
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")


def _ptr(*parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


@dataclass
class LoadedFrame:
    algebra: TruthAlgebra
    algebra_spec: dict
    frame: GraphFrame
    model: Model
    tables: dict[str, list[list[str]]]
    close: bool = False
    meta: dict = field(default_factory=dict)

    @property
    def graph(self) -> AGraph:
        return self.frame.graph


def algebra_from_spec(spec: Any, where: str = "/algebra") -> TruthAlgebra:
    if not isinstance(spec, dict):
        raise FrameFileError(where, "algebra must be an object")
    kind = spec.get("kind")
    try:
        if kind in ("lukasiewicz", "goedel"):
            size = spec.get("size")
            if not isinstance(size, int) or isinstance(size, bool):
                raise FrameFileError(where + "/size", "size must be an integer")
            return (make_lukasiewicz_chain if kind == "lukasiewicz" else make_goedel_chain)(size)
        if kind == "table":
            for key in ("carrier", "order", "otimes", "residuum"):
                if not isinstance(spec.get(key), list):
                    raise FrameFileError(f"{where}/{key}", "must be an array")
            return make_table_algebra(
                spec["carrier"], spec["order"], spec["otimes"], spec["residuum"],
                name=spec.get("name", "table"),
            )
    except AlgebraValidationError as exc:
        raise FrameFileError(where, str(exc)) from exc
    except AlgebraError as exc:
        raise FrameFileError(where, str(exc)) from exc
    raise FrameFileError(where + "/kind", f"unknown algebra kind {kind!r}")


def _matrix(A: TruthAlgebra, data, rows: int, cols: int, where: str) -> list[list[int]]:
    if not isinstance(data, list) or len(data) != rows:
        raise FrameFileError(where, f"expected an array of {rows} rows")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise FrameFileError(_ptr_join(where, i), f"expected a row of {cols} values")
        vals = []
        for j, v in enumerate(row):
            if not isinstance(v, str):
                raise FrameFileError(_ptr_join(where, i, j), "truth values must be strings")
            try:
                vals.append(A.index_of(v))
            except AlgebraError as exc:
                raise FrameFileError(_ptr_join(where, i, j), str(exc)) from None
        out.append(vals)
    return out


def _ptr_join(base: str, *parts) -> str:
    return base + _ptr(*parts)


def load_frame_document(doc: Any) -> LoadedFrame:
    """Build and validate a frame and model from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise FrameFileError("", "frame file must be a JSON object")
    for key in ("algebra", "nodes", "E"):
        if key not in doc:
            raise FrameFileError(_ptr(key), "missing required member")
    A = algebra_from_spec(doc["algebra"])
    nodes = doc["nodes"]
    if (not isinstance(nodes, list) or not nodes
            or not all(isinstance(z, str) for z in nodes) or len(set(nodes)) != len(nodes)):
        raise FrameFileError("/nodes", "nodes must be a nonempty array of distinct strings")
    Z = Index(nodes)
    n = len(nodes)
    E = ARelation(A, Z, Z, _matrix(A, doc["E"], n, n, "/E"))
    try:
        graph = AGraph(E)
    except GraphError as exc:
        raise FrameFileError("/E", str(exc)) from None

    relations_doc = doc.get("relations", {})
    if not isinstance(relations_doc, dict):
        raise FrameFileError("/relations", "relations must be an object")
    pairs = {}
    for label, rel in relations_doc.items():
        where = _ptr("relations", label)
        if not isinstance(rel, dict) or not set(rel) <= {"box", "dia"}:
            raise FrameFileError(where, "expected an object with 'box' and/or 'dia'")
        box = rel.get("box")
        box_R = ARelation(A, Z, Z, _matrix(A, box, n, n, where + "/box")) if box is not None else None
        if "dia" in rel:
            dia = rel["dia"]
            dia_R = ARelation(A, Z, Z, _matrix(A, dia, n, n, where + "/dia")) if dia is not None else None
        else:
            dia_R = box_R.converse() if box_R is not None else None
        if box_R is None and dia_R is None:
            raise FrameFileError(where, "a modality needs a box or a diamond relation")
        pairs[label] = RelationPair(box_R, dia_R)
    try:
        frame = GraphFrame(graph, pairs)
    except CompatibilityError as exc:
        raise FrameFileError("/relations", str(exc)) from exc

    close = doc.get("close", False)
    if not isinstance(close, bool):
        raise FrameFileError("/close", "close must be a boolean")
    vals_doc = doc.get("valuations", {})
    if not isinstance(vals_doc, dict):
        raise FrameFileError("/valuations", "valuations must be an object")
    tables = {}
    for atom, table in vals_doc.items():
        tables[atom] = _matrix(A, table, A.size, n, _ptr("valuations", atom))
    try:
        model = make_valuation(frame, tables, "close" if close else "strict")
    except ValueError as exc:
        atom = getattr(exc, "atom", "")
        raise FrameFileError(_ptr("valuations", atom) if atom else "/valuations", str(exc)) from exc
    string_tables = {
        atom: [[A.format(v) for v in row] for row in graph.as_table(model.valuation[atom].extent)]
        for atom in tables
    }
    return LoadedFrame(A, dict(doc["algebra"]), frame, model, string_tables, close, dict(doc.get("meta", {})))


def load_frame(path) -> LoadedFrame:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameFileError("", f"invalid JSON: {exc}") from exc
    return load_frame_document(doc)


def dump_frame(loaded: LoadedFrame) -> dict:
    """The document form of a loaded frame; both roles are written out explicitly."""
    frame = loaded.frame
    relations = {}
    for label, pair in frame.relations.items():
        relations[label] = {
            "box": pair.box.rows() if pair.box is not None else None,
            "dia": pair.dia.rows() if pair.dia is not None else None,
        }
    doc = {
        "algebra": loaded.algebra_spec,
        "nodes": list(frame.graph.nodes),
        "E": frame.graph.E.rows(),
        "relations": relations,
        "valuations": {k: [list(r) for r in v] for k, v in loaded.tables.items()},
        "close": loaded.close,
    }
    if loaded.meta:
        doc["meta"] = loaded.meta
    return doc


_STRING_ROW = re.compile(r'\[\s+((?:"[^"\\]*",\s+)*"[^"\\]*")\s+\]')


def save_frame(path, loaded: LoadedFrame) -> None:
    """Write the frame as indented JSON with each matrix row on one line."""
    text = json.dumps(dump_frame(loaded), indent=2, ensure_ascii=False)
    text = _STRING_ROW.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    Path(path).write_text(text + "\n", encoding="utf-8")
