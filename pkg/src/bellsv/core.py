"""Coefficient matrices, correlation tables and the exact local-realistic bound.

A Bell expression is a linear form sum_{x,y} g[x,y] * E(x,y) over joint
correlations E(x,y) in [-1, 1].  The classical (local-realistic) bound is the
maximum of that form over deterministic sign assignments a(x), b(y).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    EnumerationBudgetError,
    ValidationError,
)

__all__ = [
    "BellCoefficients",
    "CorrelationTable",
    "DeterministicAssignment",
    "evaluate_bell",
    "correlations_from_assignment",
    "classical_bound",
    "load_matrix",
    "parse_matrix_csv",
    "parse_matrix_json",
]

# Hard cap on the number of sign patterns classical_bound may enumerate.
ENUMERATION_BUDGET_BITS = 30

_CORRELATION_SLACK = 1e-9


def _as_matrix(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValidationError(f"{name} must be a 2-d matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains non-finite entries")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class BellCoefficients:
    """Real m1 x m2 coefficient matrix defining a correlation Bell inequality."""

    entries: np.ndarray

    def __post_init__(self):
        arr = _as_matrix(self.entries, "coefficient matrix")
        if not np.any(arr):
            raise ValidationError("coefficient matrix must not be all zeros")
        object.__setattr__(self, "entries", arr)

    @property
    def m1(self) -> int:
        return self.entries.shape[0]

    @property
    def m2(self) -> int:
        return self.entries.shape[1]


@dataclass(frozen=True)
class CorrelationTable:
    """Table of joint correlations E(x, y), each in [-1, 1].

    Entries may exceed the interval by at most 1e-9 (roundoff) and are clamped;
    larger excursions signal a non-physical table and are rejected.
    """

    values: np.ndarray

    def __post_init__(self):
        arr = _as_matrix(self.values, "correlation table")
        if np.abs(arr).max() > 1.0 + _CORRELATION_SLACK:
            raise ValidationError(
                f"correlation entries must lie in [-1, 1], worst is {np.abs(arr).max()}"
            )
        clamped = np.clip(arr, -1.0, 1.0)
        clamped.flags.writeable = False
        object.__setattr__(self, "values", clamped)


@dataclass(frozen=True)
class DeterministicAssignment:
    """Local deterministic strategy: signs a(x) for Alice and b(y) for Bob."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        for name in ("a", "b"):
            vec = np.array(getattr(self, name), dtype=int).ravel()
            if vec.size < 1 or not np.all(np.abs(vec) == 1):
                raise ValidationError(f"assignment {name} must consist of +-1 signs")
            vec.flags.writeable = False
            object.__setattr__(self, name, vec)


def evaluate_bell(g: BellCoefficients, e: CorrelationTable) -> float:
    """Value of the Bell expression sum_{x,y} g[x,y] * E(x,y)."""
    if g.entries.shape != e.values.shape:
        raise DimensionMismatchError(
            f"coefficients are {g.entries.shape}, correlations are {e.values.shape}"
        )
    return float(np.sum(g.entries * e.values))


def correlations_from_assignment(d: DeterministicAssignment) -> CorrelationTable:
    """Correlations E(x, y) = a(x) * b(y) of a deterministic strategy."""
    return CorrelationTable(np.outer(d.a, d.b).astype(float))


def _enumerate_best(g: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    """Maximize sum_xy g[x,y] a_x b_y over signs, enumerating b in {+-1}^m2.

    For each b the optimal a is a_x = sign(sum_y g[x,y] b_y), with ties broken
    towards +1, so the value accumulates as sum_x |row sum|.
    """
    m2 = g.shape[1]
    best_val = -np.inf
    best_b = None
    chunk = 1 << 14
    total = 1 << m2
    bits = np.arange(m2)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        # (n_patterns, m2) sign matrix from the binary expansion of each code;
        # bit 0 maps to +1 so enumeration starts at the all-ones assignment
        b = (1 - ((codes[:, None] >> bits[None, :]) & 1) * 2).astype(float)
        vals = np.abs(g @ b.T).sum(axis=0)
        i = int(np.argmax(vals))
        if vals[i] > best_val:
            best_val = float(vals[i])
            best_b = b[i]
    a = np.where(g @ best_b >= 0, 1, -1)
    return best_val, a.astype(int), best_b.astype(int)


def classical_bound(g: BellCoefficients) -> tuple[float, DeterministicAssignment]:
    """Exact local-realistic bound B_g and one maximizing sign assignment.

    Enumerates over the smaller of the two sides (the problem is symmetric
    under transposition with the roles of a and b swapped).
    """
    transpose = g.m2 > g.m1
    mat = g.entries.T if transpose else g.entries
    if mat.shape[1] > ENUMERATION_BUDGET_BITS:
        raise EnumerationBudgetError(
            required=1 << mat.shape[1], allowed=1 << ENUMERATION_BUDGET_BITS
        )
    val, a, b = _enumerate_best(mat)
    if transpose:
        a, b = b, a
    return val, DeterministicAssignment(a=a, b=b)


def parse_matrix_csv(text: str) -> BellCoefficients:
    """Parse a headerless CSV matrix, one row per Alice setting."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([float(tok) for tok in line.split(",")])
        except ValueError as exc:
            raise ValidationError(f"bad CSV value on line {lineno}: {exc}") from exc
    if not rows:
        raise ValidationError("empty matrix input")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValidationError("ragged CSV rows")
    return BellCoefficients(np.array(rows))


def parse_matrix_json(text: str) -> BellCoefficients:
    """Parse a JSON matrix of the form {"rows": [[...], ...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValidationError('JSON matrix must be an object with a "rows" key')
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ValidationError('"rows" must be a non-empty list of lists')
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValidationError("ragged JSON rows")
    try:
        return BellCoefficients(np.array(rows, dtype=float))
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad JSON matrix entries: {exc}") from exc


def load_matrix(text: str, fmt: str = "auto") -> BellCoefficients:
    """Parse matrix input in CSV or JSON format ("auto" sniffs for JSON)."""
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith(("{", "[")) else "csv"
    if fmt == "csv":
        return parse_matrix_csv(text)
    if fmt == "json":
        return parse_matrix_json(text)
    raise ValidationError(f"unknown matrix format {fmt!r}")
