"""Finite magmas as Cayley tables: construction, text format, canonical forms."""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

CANONICAL_CAP = 7


class TableError(ValueError):
    """Raised for malformed Cayley tables or table files."""


class Magma:
    """A total binary operation on the carrier {0, ..., order-1}.

    The table is stored flat in row-major order, so the product of a and b
    is ``table[a * order + b]``. Instances are treated as immutable; the
    table is always a tuple.
    """

    __slots__ = ("order", "table")

    def __init__(self, order: int, table: Sequence[int]):
        if order < 1:
            raise TableError("order must be positive")
        tab = table if isinstance(table, tuple) else tuple(table)
        if len(tab) != order * order:
            raise TableError(f"table has {len(tab)} entries, expected {order * order}")
        self.order = order
        self.table = tab

    def op(self, a: int, b: int) -> int:
        return self.table[a * self.order + b]

    def rows(self) -> list[list[int]]:
        n = self.order
        return [list(self.table[r * n:(r + 1) * n]) for r in range(n)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Magma)
            and self.order == other.order
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.order, self.table))

    def __repr__(self) -> str:
        return f"Magma({self.order}, {self.table!r})"


def magma_from_rows(rows: Sequence[Sequence[int]]) -> Magma:
    """Build a validated Magma from a square list of rows."""
    n = len(rows)
    if n == 0:
        raise TableError("expected at least one row")
    flat = []
    for r, row in enumerate(rows):
        if len(row) != n:
            raise TableError(f"row {r} has {len(row)} entries, expected {n}")
        for c, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not (0 <= v < n):
                raise TableError(f"entry {v} out of range at ({r},{c})")
            flat.append(v)
    return Magma(n, tuple(flat))


def parse_table(text: str) -> Magma:
    """Parse the Cayley text format: order on the first line, then the rows.

    Lines starting with '#' and blank lines are skipped. Raises TableError
    with a line number for malformed input.
    """
    content: list[tuple[int, str]] = []
    for ln, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        content.append((ln, stripped))
    if not content:
        raise TableError("empty table text")
    ln, head = content[0]
    try:
        order = int(head)
    except ValueError:
        raise TableError(f"line {ln}: expected integer order, got {head!r}") from None
    if order < 1:
        raise TableError(f"line {ln}: order must be positive")
    body = content[1:]
    if len(body) != order:
        raise TableError(f"expected {order} rows, found {len(body)}")
    rows = []
    for ln, line in body:
        toks = line.split()
        if len(toks) != order:
            raise TableError(f"line {ln}: expected {order} entries, found {len(toks)}")
        row = []
        for tok in toks:
            try:
                row.append(int(tok))
            except ValueError:
                raise TableError(f"line {ln}: non-integer token {tok!r}") from None
        rows.append(row)
    return magma_from_rows(rows)


def format_table(m: Magma) -> str:
    """Inverse of parse_table; ends with a newline."""
    n = m.order
    lines = [str(n)]
    for r in range(n):
        lines.append(" ".join(str(v) for v in m.table[r * n:(r + 1) * n]))
    return "\n".join(lines) + "\n"


def relabel(m: Magma, perm: Sequence[int]) -> Magma:
    """Apply a carrier permutation: new(p a, p b) = p(old(a, b))."""
    n = m.order
    if sorted(perm) != list(range(n)):
        raise TableError(f"not a permutation of 0..{n - 1}: {list(perm)!r}")
    t = m.table
    out = [0] * (n * n)
    for a in range(n):
        pa = perm[a] * n
        for b in range(n):
            out[pa + perm[b]] = perm[t[a * n + b]]
    return Magma(n, tuple(out))


def canonical_form(m: Magma, cap: int = CANONICAL_CAP) -> Magma:
    """Lexicographically least relabeling of the flat table.

    Scans all order! permutations, so the order is capped (default 7).
    Two magmas are isomorphic iff their canonical forms are equal.
    """
    n = m.order
    if n > cap:
        raise TableError(f"order {n} exceeds canonicalization cap {cap}")
    t = m.table
    if n == 1:
        return m
    best = None
    rng = range(n)
    inv = [0] * n
    for perm in permutations(rng):
        for i, p in enumerate(perm):
            inv[p] = i
        cand = tuple(perm[t[inv[i] * n + inv[j]]] for i in rng for j in rng)
        if best is None or cand < best:
            best = cand
    return Magma(n, best)


def is_isomorphic(a: Magma, b: Magma, cap: int = CANONICAL_CAP) -> bool:
    """Decide isomorphism by comparing canonical forms."""
    if a.order != b.order:
        return False
    return canonical_form(a, cap).table == canonical_form(b, cap).table
