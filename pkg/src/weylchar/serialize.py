"""External formats: JSON, TSV and DOT. All indices are 1-based here.

Internally everything is 0-based; this module is the only place where the
shift happens. Emitted JSON is deterministic byte for byte.
"""

import json

from .branching import IndexedMatrix
from .crystal import CrystalWord
from .errors import InputError
from .shapes import MultiComposition, MultiPartition, Partition, ShapeBound
from .symfunc import MonomialPoly, SchurExpansion
from .tableaux import Tableau

FORMAT_VERSION = 1


def json_bytes(obj) -> bytes:
    """Canonical JSON encoding: fixed separators, preserved key order."""
    return (json.dumps(obj, separators=(",", ":")) + "\n").encode("utf-8")


def multipartition_to_obj(mp: MultiPartition) -> list:
    return [list(c.parts) for c in mp.components]


def multipartition_from_obj(obj, r: int = None) -> MultiPartition:
    if not isinstance(obj, list) or not obj or not all(isinstance(c, list) for c in obj):
        raise InputError(f"not a multipartition: {obj!r}")
    if r is not None and len(obj) != r:
        raise InputError(f"expected {r} components, got {len(obj)}")
    try:
        return MultiPartition(Partition(c) for c in obj)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc))


def multicomposition_to_obj(mc: MultiComposition) -> list:
    return [list(row) for row in mc.rows]


def multicomposition_from_obj(obj) -> MultiComposition:
    if not isinstance(obj, list) or not all(isinstance(c, list) for c in obj):
        raise InputError(f"not a multicomposition: {obj!r}")
    try:
        return MultiComposition(tuple(tuple(int(x) for x in row) for row in obj))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc))


def tableau_to_obj(t: Tableau) -> dict:
    """Cells listed in reading order as 1-based [i, j, k, a, c] rows."""
    return {
        "shape": multipartition_to_obj(t.shape.outer),
        "inner": multipartition_to_obj(t.shape.inner),
        "entries": [
            [cell.i + 1, cell.j + 1, cell.k + 1, e.a + 1, e.c + 1]
            for cell, e in t.items()
        ],
    }


def word_to_obj(w: CrystalWord) -> list:
    """Letter sequences with 1-based letters."""
    return [[a + 1 for a in word] for word in w.words]


def matrix_to_obj(m: IndexedMatrix) -> dict:
    return {
        "n": m.n,
        "r": m.r,
        "m": list(m.bound.m),
        "order": [multipartition_to_obj(mp) for mp in m.order],
        "rows": [list(row) for row in m.rows],
    }


def matrix_from_obj(obj) -> IndexedMatrix:
    try:
        return IndexedMatrix(
            int(obj["n"]),
            ShapeBound(obj["m"]),
            tuple(multipartition_from_obj(mp, int(obj["r"])) for mp in obj["order"]),
            obj["rows"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad matrix object: {exc}")


def matrix_to_tsv(m: IndexedMatrix) -> str:
    lines = [f"# n={m.n} r={m.r} m={','.join(str(x) for x in m.bound.m)}"]
    for mp, row in zip(m.order, m.rows):
        label = json.dumps(multipartition_to_obj(mp), separators=(",", ":"))
        lines.append(label + "\t" + "\t".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def expansion_to_obj(e) -> dict:
    if isinstance(e, MonomialPoly):
        return {
            "basis": "monomial",
            "degree": e.degree,
            "terms": [
                {"index": multicomposition_to_obj(mc), "coeff": c}
                for mc, c in e.canonical_items()
            ],
        }
    if isinstance(e, SchurExpansion):
        return {
            "basis": "schur",
            "degree": e.degree,
            "terms": [
                {"index": multipartition_to_obj(mp), "coeff": c}
                for mp, c in e.canonical_items()
            ],
        }
    raise InputError(f"cannot serialize {type(e).__name__}")


def weyl_expansion_to_obj(e: SchurExpansion) -> dict:
    obj = expansion_to_obj(e)
    obj["basis"] = "tilde"
    return obj


def scan_report_to_obj(report: dict) -> dict:
    def triple(v):
        la, mu, nu, c = v
        return {
            "lambda": multipartition_to_obj(la),
            "mu": multipartition_to_obj(mu),
            "nu": multipartition_to_obj(nu),
            "coeff": c,
        }

    return {
        "n_max": report["n_max"],
        "r": report["r"],
        "scanned": report["scanned"],
        "c1_violations": [triple(v) for v in report["c1_violations"]],
        "c2_violations": [triple(v) for v in report["c2_violations"]],
    }


def components_to_dot(components) -> str:
    """Crystal graph in DOT: one cluster per connected component, labeled by
    its highest weight; node labels are serialized tableaux, edges carry the
    lowering operator."""
    lines = ["digraph crystal {"]
    counter = 0
    for ci, comp in enumerate(components):
        hw = json.dumps(multipartition_to_obj(comp.highest_weight), separators=(",", ":"))
        lines.append(f"  subgraph cluster_{ci} {{")
        lines.append(f'    label="{hw}";')
        ids = []
        for t in comp.tableaux:
            label = json.dumps(tableau_to_obj(t), separators=(",", ":"))
            lines.append(f'    t{counter} [label="{label.replace(chr(34), chr(39))}"];')
            ids.append(f"t{counter}")
            counter += 1
        for src, op, dst in sorted(comp.edges):
            lines.append(
                f'    {ids[src]} -> {ids[dst]} [label="f({op.i + 1},{op.k + 1})"];'
            )
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def components_to_summary(components) -> list:
    return [
        {
            "highest_weight": multipartition_to_obj(c.highest_weight),
            "size": len(c.tableaux),
        }
        for c in components
    ]
