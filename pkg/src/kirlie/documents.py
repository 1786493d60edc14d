"""Text documents for algebras, cocycles, skew maps and matrices.

Documents are JSON with one bracket entry per line; coefficients are exact
strings ("1", "-3", "2/5") so nothing passes through floating point.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .exactlin import FieldSpec, Matrix
from .extend import PsiMap
from .liecore import LieAlgebra, StructureError, validate


class DocumentError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(field)
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class JacobiError(DocumentError):
    def __init__(self, message: str, triple):
        self.triple = triple
        super().__init__(message)


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno) from None


def _entry_lines(text: str, key: str) -> list:
    """Line numbers of lines opening an entry that carries ``key``."""
    return [n for n, line in enumerate(text.splitlines(), 1) if f'"{key}"' in line]


def _scalar(F: FieldSpec, raw, where: str, line=None):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise DocumentError("coefficients must be strings like \"2/5\"", line, where)
    if isinstance(raw, str):
        s = raw.strip()
        if not s or any(ch in s for ch in ".eE "):
            raise DocumentError(f"not an exact coefficient: {raw!r}", line, where)
        try:
            Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"not an exact coefficient: {raw!r}", line, where) from None
    try:
        return F(raw)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DocumentError(str(exc), line, where) from None


def _int(raw, where: str, line=None) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise DocumentError("expected an integer", line, where)
    return raw


def _field(obj: dict) -> FieldSpec:
    tag = obj.get("field", "Q")
    if not isinstance(tag, str):
        raise DocumentError("field tag must be a string", None, "field")
    try:
        return FieldSpec.parse(tag)
    except ValueError as exc:
        raise DocumentError(str(exc), None, "field") from None


def algebra_from_obj(obj: Any, lines: Optional[list] = None, check: bool = True) -> LieAlgebra:
    if not isinstance(obj, dict):
        raise DocumentError("algebra document must be an object")
    F = _field(obj)
    dim = _int(obj.get("dim"), "dim")
    if dim < 0:
        raise DocumentError("dimension must be nonnegative", None, "dim")
    name = obj.get("name", "algebra")
    if not isinstance(name, str):
        raise DocumentError("name must be a string", None, "name")
    labels = obj.get("basis")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise DocumentError("basis must be a list of strings", None, "basis")
        if len(labels) != dim:
            raise DocumentError(f"{len(labels)} basis labels for dimension {dim}", None, "basis")
        if len(set(labels)) != dim:
            raise DocumentError("basis labels must be distinct", None, "basis")
    entries = obj.get("brackets", [])
    if not isinstance(entries, list):
        raise DocumentError("brackets must be a list", None, "brackets")
    table = {}
    for pos, entry in enumerate(entries):
        line = lines[pos] if lines and len(lines) == len(entries) else None
        where = f"brackets[{pos}]"
        if not isinstance(entry, dict):
            raise DocumentError("bracket entry must be an object", line, where)
        i = _int(entry.get("i"), where + ".i", line)
        j = _int(entry.get("j"), where + ".j", line)
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise DocumentError(f"index out of range 1..{dim}", line, where)
        if i == j:
            raise DocumentError("bracket of a basis vector with itself", line, where)
        if i < j:
            raise DocumentError("entries must have i > j", line, where)
        if (i, j) in table:
            raise DocumentError(f"duplicate entry ({i}, {j})", line, where)
        terms = entry.get("terms")
        if not isinstance(terms, list):
            raise DocumentError("terms must be a list", line, where + ".terms")
        parsed = {}
        for t, term in enumerate(terms):
            tw = f"{where}.terms[{t}]"
            if not isinstance(term, list) or len(term) != 2:
                raise DocumentError("term must be [k, coefficient]", line, tw)
            k = _int(term[0], tw, line)
            if not 1 <= k <= dim:
                raise DocumentError(f"index out of range 1..{dim}", line, tw)
            if k in parsed:
                raise DocumentError(f"repeated term index {k}", line, tw)
            parsed[k] = _scalar(F, term[1], tw, line)
        table[(i, j)] = parsed
    try:
        g = LieAlgebra.from_brackets(name, dim, table, F, labels)
    except StructureError as exc:
        raise DocumentError(str(exc)) from None
    if check:
        rep = validate(g)
        if not rep.ok:
            raise JacobiError(rep.message, rep.triple)
    return g


def loads_algebra(text: str, check: bool = True) -> LieAlgebra:
    return algebra_from_obj(_loads(text), _entry_lines(text, "i"), check)


def load_algebra(path: str, check: bool = True) -> LieAlgebra:
    with open(path, encoding="utf-8") as fh:
        return loads_algebra(fh.read(), check)


def algebra_to_obj(g: LieAlgebra) -> dict:
    F = g.field
    return {
        "name": g.name,
        "field": F.tag,
        "dim": g.dim,
        "basis": list(g.labels),
        "brackets": [
            {"i": i + 1, "j": j + 1, "terms": [[k + 1, F.format(c)] for k, c in terms]}
            for (i, j), terms in g.brackets
        ],
    }


def dumps_algebra(g: LieAlgebra) -> str:
    obj = algebra_to_obj(g)
    head = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in obj.items() if k != "brackets")
    rows = ",\n".join(f"    {json.dumps(e)}" for e in obj["brackets"])
    body = f"[\n{rows}\n  ]" if rows else "[]"
    return f"{{\n{head},\n  \"brackets\": {body}\n}}\n"


# -- cocycles: {"omega": [[i, j, "c"], ...]} with i > j, 1-based -------------


def omega_from_obj(obj: Any, n: int, F: FieldSpec) -> Matrix:
    if isinstance(obj, dict):
        obj = obj.get("omega")
    if not isinstance(obj, list):
        raise DocumentError("omega must be a list of [i, j, coefficient]", None, "omega")
    m = [[F.zero] * n for _ in range(n)]
    seen = set()
    for pos, entry in enumerate(obj):
        where = f"omega[{pos}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise DocumentError("entry must be [i, j, coefficient]", None, where)
        i, j = _int(entry[0], where), _int(entry[1], where)
        if not (1 <= j < i <= n):
            raise DocumentError(f"need 1 <= j < i <= {n}", None, where)
        if (i, j) in seen:
            raise DocumentError(f"duplicate entry ({i}, {j})", None, where)
        seen.add((i, j))
        c = _scalar(F, entry[2], where)
        m[i - 1][j - 1] = c
        m[j - 1][i - 1] = -c
    return tuple(tuple(r) for r in m)


def loads_omega(text: str, n: int, F: FieldSpec) -> Matrix:
    return omega_from_obj(_loads(text), n, F)


def omega_to_obj(omega: Matrix, F: FieldSpec) -> dict:
    n = len(omega)
    return {"omega": [[i + 1, j + 1, F.format(omega[i][j])]
                      for i in range(n - 1, -1, -1) for j in range(i - 1, -1, -1) if omega[i][j]]}


# -- psi tensors: {"field", "n", "values": [{"i", "j", "vector"}]} ----------


def psi_from_obj(obj: Any) -> PsiMap:
    if not isinstance(obj, dict):
        raise DocumentError("psi document must be an object")
    F = _field(obj)
    n = _int(obj.get("n"), "n")
    if n < 1:
        raise DocumentError("n must be positive", None, "n")
    values = {}
    entries = obj.get("values", [])
    if not isinstance(entries, list):
        raise DocumentError("values must be a list", None, "values")
    for pos, e in enumerate(entries):
        where = f"values[{pos}]"
        if not isinstance(e, dict):
            raise DocumentError("entry must be an object", None, where)
        i, j = _int(e.get("i"), where + ".i"), _int(e.get("j"), where + ".j")
        if not (1 <= j < i <= n):
            raise DocumentError(f"need 1 <= j < i <= {n}", None, where)
        if (i - 1, j - 1) in values:
            raise DocumentError(f"duplicate entry ({i}, {j})", None, where)
        vec = e.get("vector")
        if not isinstance(vec, list) or len(vec) != n:
            raise DocumentError(f"vector must have length {n}", None, where + ".vector")
        values[(i - 1, j - 1)] = [_scalar(F, x, f"{where}.vector[{k}]") for k, x in enumerate(vec)]
    return PsiMap.from_values(F, n, values)


def loads_psi(text: str) -> PsiMap:
    return psi_from_obj(_loads(text))


def psi_to_obj(psi: PsiMap) -> dict:
    F, n = psi.field, psi.n
    return {
        "field": F.tag,
        "n": n,
        "values": [
            {"i": i + 1, "j": j + 1, "vector": [F.format(x) for x in psi.tensor[i][j]]}
            for i in range(n - 1, -1, -1) for j in range(i - 1, -1, -1)
            if any(psi.tensor[i][j])
        ],
    }


# -- matrices: {"field", "rows": [["1", "0"], ...]} -------------------------


def matrix_from_obj(obj: Any, F: Optional[FieldSpec] = None) -> Matrix:
    if not isinstance(obj, dict):
        raise DocumentError("matrix document must be an object")
    if F is None:
        F = _field(obj)
    rows = obj.get("rows")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError("rows must be a nonempty list of lists", None, "rows")
    width = len(rows[0])
    out = []
    for a, r in enumerate(rows):
        if len(r) != width:
            raise DocumentError("ragged matrix", None, f"rows[{a}]")
        out.append(tuple(_scalar(F, x, f"rows[{a}][{b}]") for b, x in enumerate(r)))
    return tuple(out)


def loads_matrix(text: str, F: Optional[FieldSpec] = None) -> Matrix:
    return matrix_from_obj(_loads(text), F)
