"""Exhaustive streams of finite tables, in lexicographic order of the flat table.

Two generation modes: every magma, or Latin squares only (rows and columns
are permutations). Equational constraints are pushed into the backtracking:
each ground instance of a constraint is parked on the first table cell its
evaluation needs, re-examined whenever that cell is filled, and the branch
is pruned as soon as an instance evaluates to a mismatch.

The search tree splits at the first row, so work can be farmed out to
worker processes; sub-streams are merged back in first-row order, which
keeps the output identical for any worker count.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations, product
from multiprocessing import Pool
from typing import Iterator

from .core import Magma, canonical_form
from .laws import Law
from .properties import holds

ALL_MAGMAS = "all-magmas"
LATIN = "latin-squares"

_ALL_CAP_PLAIN = 3
_ALL_CAP_CONSTRAINED = 4
_LATIN_CAP = 6
_ISO_CAP = 7

MAX_ORDER_ENV = "MAGMA_LAB_MAX_ORDER"


class InfeasibleError(ValueError):
    """The requested enumeration is over the feasibility cap."""


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate.

    ``non_latin`` keeps only tables with at least one repeated row or
    column entry; it is how a search refutes H without a post-filter pass.
    """

    order: int
    mode: str = ALL_MAGMAS
    constraints: tuple[Law, ...] = ()
    up_to_iso: bool = False
    non_latin: bool = False


def _split_constraints(spec: EnumSpec):
    eqs = tuple(law for law in spec.constraints if law.is_equational)
    post = tuple(law for law in spec.constraints if not law.is_equational)
    return eqs, post


def _order_cap(mode: str, has_equational: bool) -> int:
    env = os.environ.get(MAX_ORDER_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InfeasibleError(f"bad {MAX_ORDER_ENV} value {env!r}") from None
    if mode == LATIN:
        return _LATIN_CAP
    return _ALL_CAP_CONSTRAINED if has_equational else _ALL_CAP_PLAIN


def validate_spec(spec: EnumSpec) -> None:
    if spec.mode not in (ALL_MAGMAS, LATIN):
        raise InfeasibleError(f"unknown mode {spec.mode!r}")
    if spec.order < 1:
        raise InfeasibleError("order must be positive")
    if spec.non_latin and spec.mode == LATIN:
        raise InfeasibleError("non_latin contradicts latin-squares mode")
    eqs, _ = _split_constraints(spec)
    cap = _order_cap(spec.mode, bool(eqs))
    if spec.order > cap:
        raise InfeasibleError(
            f"order {spec.order} exceeds the {spec.mode} cap {cap}; "
            f"set {MAX_ORDER_ENV} to override"
        )
    if spec.up_to_iso and spec.order > _ISO_CAP:
        raise InfeasibleError(f"up_to_iso needs order <= {_ISO_CAP}")


def _instances(eq_laws, n: int) -> list:
    """Ground every equation: variables replaced by values, APPLY stays -1."""
    insts = []
    for law in eq_laws:
        eq = law.equation
        k = len(eq.variables)
        for env in product(range(n), repeat=k):
            lhs = tuple(env[c] if c >= 0 else -1 for c in eq.lhs_code)
            rhs = tuple(env[c] if c >= 0 else -1 for c in eq.rhs_code)
            insts.append((lhs, rhs))
    return insts


def _try_instance(inst, table, n: int) -> int:
    """-1 satisfied, -2 violated, else the first unfilled cell the instance needs."""
    left = -3
    for side in inst:
        stack = []
        for c in side:
            if c >= 0:
                stack.append(c)
            else:
                b = stack.pop()
                a = stack.pop()
                v = table[a * n + b]
                if v is None:
                    return a * n + b
                stack.append(v)
        if left == -3:
            left = stack[0]
        elif left != stack[0]:
            return -2
    return -1


def _run(n: int, latin: bool, insts, prefix, non_latin: bool, collect) -> int:
    """Backtrack over cells in row-major order. Returns the number of tables
    accepted; appends flat tuples to collect when it is a list."""
    n2 = n * n
    table: list = [None] * n2
    full = (1 << n) - 1
    row_used = [0] * n
    col_used = [0] * n
    parked: dict[int, list] = {}
    count = 0
    dup_count = 0

    for inst in insts:
        res = _try_instance(inst, table, n)
        if res == -2:
            return 0
        if res >= 0:
            parked.setdefault(res, []).append(inst)

    def place(pos: int, v: int):
        nonlocal dup_count
        r, c = divmod(pos, n)
        bit = 1 << v
        ru = row_used[r]
        cu = col_used[c]
        dup = 1 if (ru & bit) or (cu & bit) else 0
        rowbit = bit & ~ru
        colbit = bit & ~cu
        table[pos] = v
        row_used[r] = ru | bit
        col_used[c] = cu | bit
        dup_count += dup
        pend = parked.pop(pos, None)
        moved = None
        if pend is not None:
            moved = []
            for inst in pend:
                res = _try_instance(inst, table, n)
                if res == -2:
                    for cell in reversed(moved):
                        parked[cell].pop()
                    parked[pos] = pend
                    row_used[r] ^= rowbit
                    col_used[c] ^= colbit
                    dup_count -= dup
                    table[pos] = None
                    return None
                if res >= 0:
                    parked.setdefault(res, []).append(inst)
                    moved.append(res)
        return (r, c, rowbit, colbit, dup, moved, pend)

    def unplace(pos: int, tok) -> None:
        nonlocal dup_count
        r, c, rowbit, colbit, dup, moved, pend = tok
        if moved is not None:
            for cell in reversed(moved):
                parked[cell].pop()
        if pend is not None:
            parked[pos] = pend
        row_used[r] ^= rowbit
        col_used[c] ^= colbit
        dup_count -= dup
        table[pos] = None

    def go(pos: int) -> None:
        nonlocal count
        if pos == n2:
            if non_latin and dup_count == 0:
                return
            count += 1
            if collect is not None:
                collect.append(tuple(table))
            return
        if latin:
            r, c = divmod(pos, n)
            avail = full & ~(row_used[r] | col_used[c])
            while avail:
                bit = avail & -avail
                avail ^= bit
                tok = place(pos, bit.bit_length() - 1)
                if tok is not None:
                    go(pos + 1)
                    unplace(pos, tok)
        else:
            for v in range(n):
                tok = place(pos, v)
                if tok is not None:
                    go(pos + 1)
                    unplace(pos, tok)

    start = 0
    for v in prefix or ():
        if latin:
            r, c = divmod(start, n)
            if (row_used[r] | col_used[c]) & (1 << v):
                return 0
        tok = place(start, v)
        if tok is None:
            return 0
        start += 1
    go(start)
    return count


def _prefixes(spec: EnumSpec):
    n = spec.order
    if spec.mode == LATIN:
        return permutations(range(n))
    return product(range(n), repeat=n)


def _subtree_raw(args) -> list:
    spec, prefix = args
    n = spec.order
    eqs, _ = _split_constraints(spec)
    latin = spec.mode == LATIN
    if not latin and not eqs and not spec.non_latin:
        rest = n * n - len(prefix)
        return [prefix + tail for tail in product(range(n), repeat=rest)]
    out: list = []
    _run(n, latin, _instances(eqs, n), prefix, spec.non_latin, out)
    return out


def _subtree_count(args) -> int:
    spec, prefix = args
    n = spec.order
    eqs, _ = _split_constraints(spec)
    latin = spec.mode == LATIN
    if not latin and not eqs and not spec.non_latin:
        return n ** (n * n - len(prefix))
    return _run(n, latin, _instances(eqs, n), prefix, spec.non_latin, None)


def tables(spec: EnumSpec, workers: int = 1) -> Iterator[Magma]:
    """Stream the matching magmas in lexicographic flat-table order."""
    validate_spec(spec)
    _, post = _split_constraints(spec)
    order = spec.order

    def emit(chunk):
        for raw in chunk:
            m = Magma(order, raw)
            if spec.up_to_iso and canonical_form(m).table != m.table:
                continue
            if all(holds(m, law) for law in post):
                yield m

    jobs = [(spec, p) for p in _prefixes(spec)]
    if workers <= 1:
        for job in jobs:
            yield from emit(_subtree_raw(job))
    else:
        with Pool(workers) as pool:
            for chunk in pool.imap(_subtree_raw, jobs, chunksize=1):
                yield from emit(chunk)


def count(spec: EnumSpec, workers: int = 1) -> int:
    """Number of matching tables; avoids materializing them when it can."""
    validate_spec(spec)
    _, post = _split_constraints(spec)
    if spec.up_to_iso or post:
        return sum(1 for _ in tables(spec, workers))
    jobs = [(spec, p) for p in _prefixes(spec)]
    if workers <= 1:
        return sum(_subtree_count(job) for job in jobs)
    with Pool(workers) as pool:
        return sum(pool.imap(_subtree_count, jobs, chunksize=1))
