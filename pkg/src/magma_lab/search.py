"""Counterexample search: find a magma satisfying some laws and breaking another."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Magma
from .enumeration import ALL_MAGMAS, LATIN, EnumSpec, tables, validate_spec
from .laws import Law
from .properties import holds


@dataclass(frozen=True)
class SearchSpec:
    assume: tuple[Law, ...]
    refute: Law
    orders: tuple[int, int]
    up_to_iso: bool = False


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a model search.

    ``examined`` counts the structures that satisfied every assumption,
    accumulated in stream order up to and including the one found.
    """

    spec: SearchSpec
    found: Magma | None
    examined: int
    order_found: int | None


def _enum_spec(spec: SearchSpec, order: int) -> EnumSpec:
    latin = any(law.tag == "H" for law in spec.assume)
    if latin:
        constraints = tuple(law for law in spec.assume if law.tag != "H")
        mode = LATIN
        non_latin = False
    else:
        constraints = spec.assume
        mode = ALL_MAGMAS
        non_latin = spec.refute.tag == "H"
    return EnumSpec(
        order=order,
        mode=mode,
        constraints=constraints,
        up_to_iso=spec.up_to_iso,
        non_latin=non_latin,
    )


def find_model(spec: SearchSpec, workers: int = 1) -> SearchResult:
    """First magma, in order-then-table order, meeting every assumption and
    failing the refuted law. Feasibility of every order in the range is
    checked up front so a late cap error cannot waste the early orders."""
    lo, hi = spec.orders
    if lo < 1 or hi < lo:
        raise ValueError(f"bad order range {lo}..{hi}")
    especs = [_enum_spec(spec, order) for order in range(lo, hi + 1)]
    for es in especs:
        validate_spec(es)
    assumes_h = any(law.tag == "H" for law in spec.assume)
    examined = 0
    for es in especs:
        if assumes_h and spec.refute.tag == "H":
            continue
        for m in tables(es, workers):
            examined += 1
            if not holds(m, spec.refute):
                return SearchResult(spec, m, examined, es.order)
    return SearchResult(spec, None, examined, None)


def independence_matrix(
    laws, max_order: int = 3, workers: int = 1
) -> dict[tuple[Law, Law], SearchResult]:
    """For every ordered pair (p, q) with p != q, search for a model of p
    that fails q. A found entry shows p alone does not force q."""
    out: dict[tuple[Law, Law], SearchResult] = {}
    for p in laws:
        for q in laws:
            if p == q:
                continue
            spec = SearchSpec(assume=(p,), refute=q, orders=(1, max_order))
            out[(p, q)] = find_model(spec, workers)
    return out
