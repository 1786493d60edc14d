"""Whole-algebra analysis and its deterministic rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .coadjoint import (
    find_abelian_ideal_polarization,
    flatness_input,
    generic_functional,
    has_flat_generic_orbits,
    stabilizer,
)
from .decompose import DecompositionTree, full_decomposition
from .exactlin import Subspace
from .kirillov import kirillov_data
from .liecore import LieAlgebra, center, fingerprint, nilpotency_step
from .typeclass import classify


def vector_label(g: LieAlgebra, v: Sequence) -> str:
    F = g.field
    nz = [(k, c) for k, c in enumerate(v) if c]
    if not nz:
        return "0"
    parts = []
    for k, c in nz:
        s = F.format(c)
        term = g.labels[k] if s == "1" else (f"-{g.labels[k]}" if s == "-1" else f"{s}*{g.labels[k]}")
        parts.append(term)
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def span_labels(g: LieAlgebra, S: Subspace) -> list:
    return [vector_label(g, v) for v in S.basis]


@dataclass
class AnalysisReport:
    name: str
    field: str
    dim: int
    fingerprint: dict
    type_label: Optional[str] = None
    type_reason: Optional[str] = None
    kirillov: Optional[dict] = None
    decomposition: Optional[dict] = None
    flatness: Optional[dict] = None
    warnings: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "field": self.field,
            "dim": self.dim,
            "fingerprint": self.fingerprint,
            "type": {"label": self.type_label, "reason": self.type_reason},
            "kirillov": self.kirillov,
            "decomposition": self.decomposition,
            "flatness": self.flatness,
            "warnings": list(self.warnings),
        }


def kirillov_summary(g: LieAlgebra) -> dict:
    kd = kirillov_data(g)
    return {
        "m": kd.m,
        "Z": vector_label(g, kd.Z),
        "Y": [vector_label(g, y) for y in kd.Ybasis],
        "X": [vector_label(g, x) for x in kd.Xbasis],
        "second_center": span_labels(g, kd.second_center),
        "centralizer_of_second_center": span_labels(g, kd.centralizer),
    }


def decomposition_summary(g: LieAlgebra, tree: DecompositionTree) -> dict:
    def cert(c):
        if c is None:
            return None
        return {"kind": c.kind.value, "g1": span_labels(g, c.g1), "g2": span_labels(g, c.g2)}

    gr = tree.grading
    return {
        "stage1": cert(tree.stage1),
        "stage2": cert(tree.stage2),
        "grading": None if gr is None else {
            "z": span_labels(g, gr.z), "c": span_labels(g, gr.c), "V": span_labels(g, gr.V)},
        "leaves": [{"label": leaf.label.value, "span": span_labels(g, leaf.span)} for leaf in tree.leaves],
        "adapted_basis": [vector_label(g, v) for v in tree.adapted_basis],
    }


def flatness_summary(g: LieAlgebra, tree: DecompositionTree) -> dict:
    F = g.field
    inp = flatness_input(g, tree)
    if inp is None:
        xi0 = generic_functional(g, tree)
        rep = stabilizer(g, xi0)
        return {
            "criterion": "not applicable (no graded splitting)",
            "flat": None,
            "xi0": [F.format(x) for x in xi0],
            "stabilizer": span_labels(g, rep.stabilizer),
            "orbit_dim": rep.orbit_dim,
            "flat_at_xi0": rep.is_flat_at_xi,
        }
    verdict = has_flat_generic_orbits(g, *inp)
    out = {
        "criterion": "a = z or a Heisenberg",
        "flat": verdict.flat,
        "xi0": [F.format(x) for x in verdict.xi0],
        "stabilizer": span_labels(g, verdict.report.stabilizer),
        "orbit_dim": verdict.report.orbit_dim,
        "flat_at_xi0": verdict.report.is_flat_at_xi,
        "k": span_labels(g, verdict.cert.g1),
        "a": span_labels(g, verdict.cert.g2),
    }
    if verdict.flat:
        out["polarization"] = span_labels(g, find_abelian_ideal_polarization(g, verdict))
    else:
        out["witness"] = vector_label(g, verdict.witness)
    return out


def analyze(g: LieAlgebra) -> AnalysisReport:
    rep = AnalysisReport(g.name, g.field.tag, g.dim, fingerprint(g).as_dict())
    verdict = classify(g)
    rep.type_label = verdict.label.value
    rep.type_reason = verdict.reason
    if nilpotency_step(g) is None:
        rep.warnings.append("not nilpotent")
        return rep
    zdim = center(g).dim
    if zdim != 1:
        rep.warnings.append("center not 1-dimensional")
        return rep
    rep.kirillov = kirillov_summary(g)
    tree = full_decomposition(g)
    rep.warnings.extend(tree.warnings)
    rep.decomposition = decomposition_summary(g, tree)
    rep.flatness = flatness_summary(g, tree)
    return rep


def _text_lines(obj, indent: int = 0):
    pad = "  " * indent
    for key, val in obj.items():
        if isinstance(val, dict):
            yield f"{pad}{key}:"
            yield from _text_lines(val, indent + 1)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            yield f"{pad}{key}:"
            for item in val:
                yield f"{pad}  -"
                yield from _text_lines(item, indent + 2)
        elif isinstance(val, list):
            yield f"{pad}{key}: [" + ", ".join(str(v) for v in val) + "]"
        elif val is None:
            yield f"{pad}{key}: -"
        else:
            yield f"{pad}{key}: {str(val).lower() if isinstance(val, bool) else val}"


def render_text(obj: dict) -> str:
    return "\n".join(_text_lines(obj)) + "\n"


def emit(report: AnalysisReport, fmt: str = "text") -> bytes:
    data = report.as_dict()
    if fmt == "json":
        return (json.dumps(data, indent=2) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return render_text(data).encode()
