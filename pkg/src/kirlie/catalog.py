"""Built-in algebras: the seven 3-step examples with 1-dimensional center in
dimension <= 6, plus Heisenberg, abelian and filiform families."""

from __future__ import annotations

import re

from .exactlin import QQ, FieldSpec
from .liecore import LieAlgebra

# [X_i, X_j] = X_k entries, 1-based, all coefficients 1
_TABLES = {
    "n4n1": (4, [(4, 3, 2), (4, 2, 1)]),
    "n5n3": (5, [(5, 4, 2), (5, 2, 1), (4, 3, 1)]),
    "n5n6": (5, [(5, 4, 3), (5, 3, 2), (5, 2, 1), (4, 3, 1)]),
    "n6n1": (6, [(6, 5, 4), (6, 4, 1), (3, 2, 1)]),
    "n6n4": (6, [(6, 5, 3), (6, 4, 2), (5, 2, 1), (4, 3, 1)]),
    "n6n5": (6, [(6, 5, 3), (6, 4, 2), (6, 3, 1), (4, 2, 1)]),
    "n6n6": (6, [(6, 5, 3), (6, 4, 2), (5, 3, 1), (4, 2, 1)]),
}

THREE_STEP = tuple(_TABLES)


def heisenberg(m: int, field: FieldSpec = QQ) -> LieAlgebra:
    """``h_{2m+1}`` on ``Z, Y1..Ym, X1..Xm`` with ``[X_i, Y_i] = Z``."""
    if m < 1:
        raise ValueError("Heisenberg algebras need m >= 1")
    if m == 1:
        labels = ["Z", "Y", "X"]
    else:
        labels = ["Z"] + [f"Y{i}" for i in range(1, m + 1)] + [f"X{i}" for i in range(1, m + 1)]
    table = {(1 + m + i, 1 + i): {1: 1} for i in range(1, m + 1)}
    return LieAlgebra.from_brackets(f"heis{2 * m + 1}", 2 * m + 1, table, field, labels)


def abelian(n: int, field: FieldSpec = QQ) -> LieAlgebra:
    return LieAlgebra.from_brackets(f"abelian{n}", n, {}, field)


def filiform(n: int, field: FieldSpec = QQ) -> LieAlgebra:
    """Standard filiform ``L_n``: ``[X_n, X_i] = X_{i-1}`` for ``2 <= i < n``."""
    if n < 3:
        raise ValueError("filiform algebras need n >= 3")
    table = {(n, i): {i - 1: 1} for i in range(2, n)}
    return LieAlgebra.from_brackets(f"filiform{n}", n, table, field)


def catalog(name: str, field: FieldSpec = QQ) -> LieAlgebra:
    key = name.strip().lower()
    if key in _TABLES:
        dim, rows = _TABLES[key]
        table = {(i, j): {k: 1} for i, j, k in rows}
        return LieAlgebra.from_brackets(key, dim, table, field)
    m = re.fullmatch(r"(heis|abelian|filiform)(\d+)", key)
    if m:
        family, n = m.group(1), int(m.group(2))
        if family == "heis":
            if n % 2 == 0 or n < 3:
                raise KeyError(f"Heisenberg algebras have odd dimension >= 3, got {n}")
            return heisenberg((n - 1) // 2, field)
        if family == "abelian":
            return abelian(n, field)
        return filiform(n, field)
    raise KeyError(f"unknown catalog algebra {name!r}")


def catalog_list() -> list[str]:
    return list(THREE_STEP) + [
        "heis3",
        "heis5",
        "abelian2",
        "abelian3",
        "abelian4",
        "filiform4",
        "filiform5",
    ]
