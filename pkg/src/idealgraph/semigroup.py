"""Finite semigroups given by Cayley tables.

Elements are the integers 0..n-1 and the table is row-acts-on-column:
``table[i][j]`` is the product i*j.  Everything downstream (ideal
enumeration, graph construction) works on these plain integer tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

MAX_TABLE_ORDER = 4096  # n*n above this is refused by generate()


class TableFormatError(ValueError):
    """Raised by the parsers for malformed table files."""


@dataclass(frozen=True)
class CayleyTable:
    """A finite magma; associativity is checked separately by validate()."""

    order: int
    rows: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        n = self.order
        if n <= 0:
            raise ValueError("order must be positive")
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("table must be an n x n array")
        for r in self.rows:
            for v in r:
                if not 0 <= v < n:
                    raise ValueError(f"table entry {v} out of range [0, {n})")

    @classmethod
    def from_rows(cls, rows, name: str = "") -> "CayleyTable":
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        return cls(order=len(rows), rows=rows, name=name)

    def product(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def to_text(self) -> str:
        lines = [str(self.order)]
        lines += [" ".join(str(v) for v in r) for r in self.rows]
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "name": self.name,
            "order": self.order,
            "table": [list(r) for r in self.rows],
        }


@dataclass(frozen=True)
class ValidationVerdict:
    """Outcome of the associativity check, with one witness on failure."""

    valid: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate(table: CayleyTable) -> ValidationVerdict:
    """Check associativity; on failure return one triple (i,j,k) with (ij)k != i(jk)."""
    t = np.asarray(table.rows, dtype=np.intp)
    left = t[t]  # left[i,j,k] = t[t[i,j], k]
    right = np.take(t, t, axis=1)  # right[i,j,k] = t[i, t[j,k]]
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return ValidationVerdict(True)
    i, j, k = (int(v) for v in bad[0])
    return ValidationVerdict(False, witness=(i, j, k))


def zero_element(table: CayleyTable) -> int | None:
    """The unique element z with z*x = x*z = z for all x, if any."""
    n = table.order
    rows = table.rows
    for z in range(n):
        if all(rows[z][x] == z and rows[x][z] == z for x in range(n)):
            return z
    return None


def principal_left_ideal(table: CayleyTable, a: int) -> frozenset[int]:
    """S^1 a = Sa union {a}, the smallest left ideal containing a."""
    rows = table.rows
    return frozenset(rows[s][a] for s in range(table.order)) | {a}


def principal_left_ideal_mask(table: CayleyTable, a: int) -> int:
    """Bitmask variant of principal_left_ideal."""
    rows = table.rows
    m = 1 << a
    for s in range(table.order):
        m |= 1 << rows[s][a]
    return m


@dataclass(frozen=True)
class LClassPartition:
    """Partition of the elements by equality of principal left ideals."""

    classes: tuple[frozenset[int], ...]
    class_of: tuple[int, ...]


def l_class_partition(table: CayleyTable) -> LClassPartition:
    by_ideal: dict[int, list[int]] = {}
    for a in range(table.order):
        by_ideal.setdefault(principal_left_ideal_mask(table, a), []).append(a)
    blocks = sorted(by_ideal.values(), key=lambda b: b[0])
    class_of = [0] * table.order
    for idx, block in enumerate(blocks):
        for a in block:
            class_of[a] = idx
    return LClassPartition(
        classes=tuple(frozenset(b) for b in blocks), class_of=tuple(class_of)
    )


# ---------------------------------------------------------------------------
# Structured families

FAMILY_KINDS = (
    "right-zero",
    "left-zero",
    "null-with-zero",
    "rectangular-band",
    "cyclic-group",
    "zn-multiplication",
    "direct-product",
)

_FAMILY_ARITY = {
    "right-zero": 1,
    "left-zero": 1,
    "null-with-zero": 1,
    "rectangular-band": 2,
    "cyclic-group": 1,
    "zn-multiplication": 1,
    "direct-product": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    """A constructor recipe for one semigroup from a named family."""

    kind: str
    params: tuple[int, ...] = ()
    operands: tuple["FamilySpec", ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "direct-product":
            if len(self.operands) < 2:
                raise ValueError("direct-product needs at least two operand specs")
            if self.params:
                raise ValueError("direct-product takes operand specs, not params")
        else:
            if len(self.params) != _FAMILY_ARITY[self.kind]:
                raise ValueError(
                    f"{self.kind} takes {_FAMILY_ARITY[self.kind]} parameter(s)"
                )
            if any(p < 1 for p in self.params):
                raise ValueError("family sizes must be >= 1")

    def label(self) -> str:
        if self.kind == "direct-product":
            return "x".join(op.label() for op in self.operands)
        return f"{self.kind}({','.join(str(p) for p in self.params)})"


def direct_product(a: CayleyTable, b: CayleyTable, name: str = "") -> CayleyTable:
    """Componentwise product; element (x, y) is encoded as x*|b| + y."""
    nb = b.order
    n = a.order * nb
    if n * n > MAX_TABLE_ORDER * MAX_TABLE_ORDER:
        raise ValueError("direct product too large")
    rows = [
        [a.rows[x // nb][u // nb] * nb + b.rows[x % nb][u % nb] for u in range(n)]
        for x in range(n)
    ]
    return CayleyTable.from_rows(rows, name=name or f"{a.name}x{b.name}")


def generate(spec: FamilySpec) -> CayleyTable:
    """Build the Cayley table for a family spec."""
    kind = spec.kind
    if kind == "direct-product":
        tables = [generate(op) for op in spec.operands]
        out = tables[0]
        for t in tables[1:]:
            out = direct_product(out, t)
        return CayleyTable(out.order, out.rows, name=spec.label())

    if kind == "rectangular-band":
        p, q = spec.params
        n = p * q
    else:
        (n,) = spec.params
    if n * n > MAX_TABLE_ORDER * MAX_TABLE_ORDER:
        raise ValueError(f"table of order {n} exceeds the size limit")

    if kind == "right-zero":
        rows = [[y for y in range(n)] for _ in range(n)]
    elif kind == "left-zero":
        rows = [[x] * n for x in range(n)]
    elif kind == "null-with-zero":
        rows = [[0] * n for _ in range(n)]
    elif kind == "rectangular-band":
        # (i, lam) * (j, mu) = (i, mu); element (i, lam) encoded as i*q + lam
        rows = [
            [(x // q) * q + (y % q) for y in range(n)]
            for x in range(n)
        ]
    elif kind == "cyclic-group":
        rows = [[(x + y) % n for y in range(n)] for x in range(n)]
    elif kind == "zn-multiplication":
        rows = [[(x * y) % n for y in range(n)] for x in range(n)]
    else:  # pragma: no cover
        raise AssertionError(kind)
    return CayleyTable.from_rows(rows, name=spec.label())


def parse_family(text: str) -> FamilySpec:
    """Parse a compact spec like ``right-zero:3`` or ``rectangular-band:2,4``."""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    params = tuple(int(p) for p in rest.split(",") if p.strip()) if rest else ()
    return FamilySpec(kind=kind, params=params)


# ---------------------------------------------------------------------------
# Table I/O


def parse_table_text(text: str, name: str = "") -> CayleyTable:
    """Parse the plain-text format: first line n, then n rows of n entries."""
    lines = [ln for ln in text.splitlines()]
    stripped = [(i, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not stripped:
        raise TableFormatError("empty table file")
    first_line, first = stripped[0]
    try:
        n = int(first)
    except ValueError:
        raise TableFormatError(f"line {first_line + 1}: expected the order, got {first!r}")
    if n <= 0:
        raise TableFormatError(f"line {first_line + 1}: order must be positive")
    body = stripped[1:]
    if len(body) != n:
        raise TableFormatError(f"expected {n} table rows, found {len(body)}")
    rows = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != n:
            raise TableFormatError(
                f"line {lineno + 1}: expected {n} entries, found {len(parts)}"
            )
        row = []
        for col, p in enumerate(parts):
            try:
                v = int(p)
            except ValueError:
                raise TableFormatError(
                    f"line {lineno + 1}, column {col + 1}: not an integer: {p!r}"
                )
            if not 0 <= v < n:
                raise TableFormatError(
                    f"line {lineno + 1}, column {col + 1}: entry {v} out of range [0, {n})"
                )
            row.append(v)
        rows.append(tuple(row))
    return CayleyTable(order=n, rows=tuple(rows), name=name)


def parse_table_json(text: str) -> CayleyTable:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"invalid JSON: {exc}")
    if not isinstance(obj, dict) or "table" not in obj:
        raise TableFormatError('JSON table must be an object with a "table" field')
    table = obj["table"]
    n = obj.get("order", len(table))
    if not isinstance(table, list) or len(table) != n:
        raise TableFormatError(f"expected {n} table rows, found {len(table)}")
    rows = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise TableFormatError(f"row {i}: expected {n} entries")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise TableFormatError(f"row {i}, column {j}: entry {v!r} out of range")
        rows.append(tuple(row))
    return CayleyTable(order=n, rows=tuple(rows), name=str(obj.get("name", "")))


def load_table(path: str) -> CayleyTable:
    """Load a table from a .json or plain-text file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        t = parse_table_json(text)
        return t if t.name else CayleyTable(t.order, t.rows, name=path)
    return parse_table_text(text, name=path)
