"""JSON-shaped file formats for algebras and representations.

Rationals travel as strings "p/q" (a bare "p" is accepted on input) so
round-trips stay exact. Algebra files list only the nonzero brackets;
representation files carry one dense matrix per basis label and side, and
may reference the algebra inline or by file path.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .algebra import LeibnizAlgebra
from .linalg import Matrix
from .reps import Representation

ZERO = Fraction(0)


class ParseError(ValueError):
    """Malformed input file; the message carries the field locus."""


def frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_frac(text, locus: str) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"{locus}: rational values must be strings like \"p/q\"")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{locus}: {exc}") from None


def _load_json(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level: expected an object")
    return obj


def _algebra_from_object(obj: dict, locus: str = "") -> LeibnizAlgebra:
    prefix = locus + "." if locus else ""
    basis = obj.get("basis")
    if not isinstance(basis, list) or not basis:
        raise ParseError(f"{prefix}basis: expected a nonempty list of labels")
    if any(not isinstance(b, str) or not b for b in basis):
        raise ParseError(f"{prefix}basis: labels must be nonempty strings")
    if len(set(basis)) != len(basis):
        raise ParseError(f"{prefix}basis: duplicate label")
    n = len(basis)
    dim = obj.get("dim")
    if dim is not None and dim != n:
        raise ParseError(f"{prefix}dim: {dim} does not match {n} basis labels")
    pos = {b: i for i, b in enumerate(basis)}
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    brackets = obj.get("brackets", [])
    if not isinstance(brackets, list):
        raise ParseError(f"{prefix}brackets: expected a list")
    for k, entry in enumerate(brackets):
        here = f"{prefix}brackets[{k}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{here}: expected an object")
        left = entry.get("left")
        right = entry.get("right")
        if left not in pos:
            raise ParseError(f"{here}.left: unknown label {left!r}")
        if right not in pos:
            raise ParseError(f"{here}.right: unknown label {right!r}")
        if (left, right) in seen:
            raise ParseError(f"{here}: duplicate bracket ({left}, {right})")
        seen.add((left, right))
        result = entry.get("result")
        if not isinstance(result, dict):
            raise ParseError(f"{here}.result: expected an object")
        for label, value in result.items():
            if label not in pos:
                raise ParseError(f"{here}.result: unknown label {label!r}")
            table[pos[left]][pos[right]][pos[label]] = _parse_frac(
                value, f"{here}.result.{label}")
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise ParseError(f"{prefix}name: expected a string")
    rows = [[tuple(cell) for cell in row] for row in table]
    return LeibnizAlgebra(list(basis), rows, name=name)


def parse_algebra(text: str) -> LeibnizAlgebra:
    return _algebra_from_object(_load_json(text))


def algebra_to_object(alg: LeibnizAlgebra) -> dict:
    brackets = []
    names = alg.basis_names
    for i in range(alg.dim):
        for j in range(alg.dim):
            cell = alg.table[i][j]
            result = {names[k]: frac_str(c) for k, c in enumerate(cell) if c != 0}
            if result:
                brackets.append(
                    {"left": names[i], "right": names[j], "result": result})
    return {
        "name": alg.name,
        "dim": alg.dim,
        "basis": list(names),
        "brackets": brackets,
    }


def serialize_algebra(alg: LeibnizAlgebra) -> str:
    return json.dumps(algebra_to_object(alg), indent=2, sort_keys=True) + "\n"


def _matrix_from_rows(rows, d: int, locus: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != d:
        raise ParseError(f"{locus}: expected {d} rows")
    data = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            raise ParseError(f"{locus}[{r}]: expected {d} entries")
        data.append([_parse_frac(x, f"{locus}[{r}][{c}]")
                     for c, x in enumerate(row)])
    return Matrix(data)


def _matrix_to_rows(m: Matrix) -> list:
    return [[frac_str(x) for x in row] for row in m.data]


def parse_rep(text: str, base_dir: str = ".") -> Representation:
    obj = _load_json(text)
    source = obj.get("algebra")
    if isinstance(source, dict):
        alg = _algebra_from_object(source, "algebra")
    elif isinstance(source, str):
        path = source if os.path.isabs(source) else os.path.join(base_dir, source)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                alg = parse_algebra(fh.read())
        except OSError as exc:
            raise ParseError(f"algebra: cannot read {source!r}: {exc}") from None
    else:
        raise ParseError("algebra: expected an inline object or a file path")
    d = obj.get("module_dim")
    if not isinstance(d, int) or d < 1:
        raise ParseError("module_dim: expected a positive count")
    sides = {}
    for key in ("rho", "lambda"):
        block = obj.get(key)
        if not isinstance(block, dict):
            raise ParseError(f"{key}: expected an object with one matrix per label")
        extra = set(block) - set(alg.basis_names)
        if extra:
            raise ParseError(f"{key}: unknown label {sorted(extra)[0]!r}")
        missing = set(alg.basis_names) - set(block)
        if missing:
            raise ParseError(f"{key}: missing matrix for {sorted(missing)[0]!r}")
        sides[key] = tuple(
            _matrix_from_rows(block[b], d, f"{key}.{b}") for b in alg.basis_names)
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name: expected a string")
    return Representation(alg, sides["rho"], sides["lambda"], name=name)


def rep_to_object(rep: Representation, algebra_ref: str | None = None) -> dict:
    names = rep.algebra.basis_names
    return {
        "name": rep.name,
        "algebra": algebra_ref if algebra_ref is not None
        else algebra_to_object(rep.algebra),
        "module_dim": rep.space_dim,
        "rho": {b: _matrix_to_rows(rep.right[i]) for i, b in enumerate(names)},
        "lambda": {b: _matrix_to_rows(rep.left[i]) for i, b in enumerate(names)},
    }


def serialize_rep(rep: Representation, algebra_ref: str | None = None) -> str:
    return json.dumps(rep_to_object(rep, algebra_ref), indent=2, sort_keys=True) + "\n"
