"""JSON file formats for algebras and complexes.

Coefficients are strings ("a/b" reduced with positive denominator over the
rationals, decimal residues over a prime field) so no precision is lost to
JSON number types.  Serialisation is byte-stable: keys are sorted and list
orders are canonical.
"""

from __future__ import annotations

import json

from .algebra import Algebra, Element
from .complexes import BoundaryComponent, OpenClosedComplex
from .errors import FileFormatError
from .fields import Field
from .frobenius import FrobeniusStructure, canonical_frobenius, frobenius_from_counit, frobenius_from_window


def _field_to_json(field: Field):
    if field.is_rational:
        return {"kind": "rational"}
    return {"kind": "prime", "p": field.p}


def _field_from_json(obj) -> Field:
    try:
        kind = obj["kind"]
        if kind == "rational":
            return Field()
        if kind == "prime":
            return Field(int(obj["p"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"bad field spec {obj!r}") from exc
    raise FileFormatError(f"unknown field kind {obj!r}")


def algebra_to_json(alg: Algebra, frobenius=None, blocks=None) -> dict:
    f = alg.field
    doc = {
        "field": _field_to_json(f),
        "dim": alg.dim,
        "basis": list(alg.basis_names),
        "mul": [[i, j, k, f.format(c)] for (i, j, k, c) in alg.mul_entries()],
        "unit": [f.format(x) for x in alg.unit],
    }
    if frobenius is not None:
        doc["frobenius"] = frobenius
    if blocks is not None:
        doc["blocks"] = blocks
    return doc


def frobenius_spec_counit(F: FrobeniusStructure) -> dict:
    f = F.field
    return {"counit": [f.format(x) for x in F.counit]}


def algebra_from_json(doc):
    """Parse an algebra file; returns ``(Algebra, FrobeniusStructure | None, blocks | None)``.

    Mathematical preconditions (degenerate pairings, non-invertible windows)
    surface as the corresponding ``MathPrecondition`` errors, not as
    ``FileFormatError``.
    """
    try:
        field = _field_from_json(doc["field"])
        dim = int(doc["dim"])
        names = doc.get("basis") or None
        mul = [(int(i), int(j), int(k), field.parse(c)) for (i, j, k, c) in doc["mul"]]
        unit = [field.parse(c) for c in doc["unit"]]
        fr = doc.get("frobenius")
        blocks = doc.get("blocks")
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed algebra file: {exc}") from exc
    alg = Algebra(field, dim, mul, unit, basis_names=names)
    F = None
    if fr is not None:
        if fr == "canonical":
            F = canonical_frobenius(alg)
        elif isinstance(fr, dict) and "counit" in fr:
            F = frobenius_from_counit(alg, [field.parse(c) for c in fr["counit"]])
        elif isinstance(fr, dict) and "window" in fr:
            z = Element(alg, [field.parse(c) for c in fr["window"]])
            F = frobenius_from_window(alg, z)
        else:
            raise FileFormatError(f"unknown frobenius spec {fr!r}")
    if blocks is not None:
        try:
            blocks = {"sizes": [int(m) for m in blocks["sizes"]],
                      "windows": [int(a) for a in blocks["windows"]]}
        except (KeyError, TypeError, ValueError) as exc:
            raise FileFormatError(f"malformed blocks: {exc}") from exc
    return alg, F, blocks


def complex_to_json(c: OpenClosedComplex) -> dict:
    doc = {
        "vertices": c.vertex_count,
        "triangles": [list(t) for t in c.triangles],
        "coloured_edges": [list(e) for e in sorted(c.coloured_edges)],
        "black_in": [
            {"kind": b.kind, "edges": [list(e) for e in b.edges]} for b in c.black_in
        ],
        "black_out": [
            {"kind": b.kind, "edges": [list(e) for e in b.edges]} for b in c.black_out
        ],
    }
    colours = c.arc_colours()
    if colours:
        doc["brane_colours"] = {str(k): v for k, v in sorted(colours.items())}
    return doc


def complex_from_json(doc) -> OpenClosedComplex:
    try:
        vertices = int(doc["vertices"])
        triangles = [tuple(int(v) for v in t) for t in doc["triangles"]]
        coloured = [tuple(int(v) for v in e) for e in doc.get("coloured_edges", [])]
        def comps(key):
            return [
                BoundaryComponent(b["kind"], [tuple(int(v) for v in e) for e in b["edges"]])
                for b in doc.get(key, [])
            ]
        black_in = comps("black_in")
        black_out = comps("black_out")
        brane = doc.get("brane_colours") or {}
        brane = {int(k): v for k, v in brane.items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed complex file: {exc}") from exc
    c = OpenClosedComplex(vertices, triangles, coloured, black_in, black_out)
    if brane:
        arcs = c.coloured_arcs()
        colours = {}
        for idx, colour in brane.items():
            if not (0 <= idx < len(arcs)):
                raise FileFormatError(f"brane colour assigned to nonexistent arc {idx}")
            for e in arcs[idx]:
                colours[e] = colour
        c = c.replaced(edge_colours=colours)
    return c


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}") from exc
