"""Catalog of implications between the built-in laws, checked by brute force.

Each entry states that every structure in its domain satisfying the premise
laws also satisfies the conclusion laws. An equivalence is stored as the two
implication directions, one branch each. Verification sweeps the whole
domain up to a given order and reports the first counterexample, if any.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .core import Magma
from .enumeration import ALL_MAGMAS, LATIN, MAX_ORDER_ENV, EnumSpec, InfeasibleError, tables
from .laws import A, ABELIAN, AGI, AGII, C, CA, CAI, CAII, H, IN, LOOP, NE, R, Law
from .properties import holds

_ALL_CAP = 3
_QUASI_CAP = 5

QUASIGROUPS = "quasigroups"


@dataclass(frozen=True)
class Branch:
    label: str
    premises: tuple[Law, ...]
    conclusions: tuple[Law, ...]


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    kind: str  # "implication" or "equivalence"
    domain: str  # ALL_MAGMAS or QUASIGROUPS
    statement: str
    branches: tuple[Branch, ...]


@dataclass(frozen=True)
class VerificationReport:
    theorem: TheoremSpec
    max_order: int
    structures_examined: int
    counterexample: Magma | None
    branch: str | None
    elapsed: float

    @property
    def verified(self) -> bool:
        return self.counterexample is None


def _imp(premises, conclusions) -> Branch:
    label = "{%s} => {%s}" % (
        ",".join(p.tag for p in premises),
        ",".join(c.tag for c in conclusions),
    )
    return Branch(label, tuple(premises), tuple(conclusions))


def theorem_catalog() -> tuple[TheoremSpec, ...]:
    t5 = []
    for x in (CAI, CAII, AGI, AGII, R):
        t5.append(_imp((NE, IN, x), (ABELIAN,)))
        t5.append(_imp((ABELIAN,), (NE, IN, x)))
    t11 = []
    for x in (CAI, CAII, AGII, R):
        t11.append(_imp((H, x), (ABELIAN,)))
        t11.append(_imp((ABELIAN,), (H, x)))
    return (
        TheoremSpec(
            "T1", "implication", ALL_MAGMAS,
            "a commutative semigroup satisfies CAI, CAII, AGI, AGII and R",
            (_imp((A, C), (CAI, CAII, AGI, AGII, R)),),
        ),
        TheoremSpec(
            "T2", "implication", ALL_MAGMAS,
            "an abelian group has a Latin Cayley table",
            (_imp((ABELIAN,), (H,)),),
        ),
        TheoremSpec(
            "T3", "implication", ALL_MAGMAS,
            "a magma with a neutral element and AGII is a commutative semigroup",
            (_imp((NE, AGII), (A, C)),),
        ),
        TheoremSpec(
            "T4", "implication", ALL_MAGMAS,
            "a magma with a neutral element and any of CAI, CAII, AGI or R "
            "is a commutative semigroup",
            tuple(_imp((NE, x), (A, C)) for x in (CAI, CAII, AGI, R)),
        ),
        TheoremSpec(
            "T5", "equivalence", ALL_MAGMAS,
            "abelian groups are exactly the magmas with a neutral element, "
            "inverses, and any one of CAI, CAII, AGI, AGII or R",
            tuple(t5),
        ),
        TheoremSpec(
            "T6", "implication", ALL_MAGMAS,
            "an associative commutative quasigroup is an abelian group",
            (_imp((H, A, C), (ABELIAN,)),),
        ),
        TheoremSpec(
            "T7", "implication", ALL_MAGMAS,
            "a quasigroup is cancellative",
            (_imp((H,), (CA,)),),
        ),
        TheoremSpec(
            "T8", "implication", QUASIGROUPS,
            "a quasigroup with CAI is a loop",
            (_imp((H, CAI), (LOOP,)),),
        ),
        TheoremSpec(
            "T9", "implication", QUASIGROUPS,
            "a quasigroup with CAII is a loop",
            (_imp((H, CAII), (LOOP,)),),
        ),
        TheoremSpec(
            "T10", "implication", QUASIGROUPS,
            "a quasigroup with R is a loop",
            (_imp((H, R), (LOOP,)),),
        ),
        TheoremSpec(
            "T11", "equivalence", QUASIGROUPS,
            "abelian groups are exactly the quasigroups with any one of "
            "CAI, CAII, AGII or R",
            tuple(t11),
        ),
    )


CATALOG = theorem_catalog()
BY_ID = {t.id: t for t in CATALOG}


def _domain_cap(domain: str) -> int:
    env = os.environ.get(MAX_ORDER_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InfeasibleError(f"bad {MAX_ORDER_ENV} value {env!r}") from None
    return _QUASI_CAP if domain == QUASIGROUPS else _ALL_CAP


def _domain_stream(domain: str, max_order: int):
    mode = LATIN if domain == QUASIGROUPS else ALL_MAGMAS
    for order in range(1, max_order + 1):
        yield from tables(EnumSpec(order=order, mode=mode))


def verify_theorems(specs, max_order: int) -> list[VerificationReport]:
    """Check several theorems in one sweep per domain, sharing the stream
    and a per-structure law cache. Counterexamples are the first hit in
    stream order; examined counts the whole domain."""
    specs = list(specs)
    for spec in specs:
        cap = _domain_cap(spec.domain)
        if max_order > cap:
            raise InfeasibleError(
                f"{spec.id} over {spec.domain} caps at order {cap}; "
                f"set {MAX_ORDER_ENV} to override"
            )
    reports: dict[str, VerificationReport] = {}
    for domain in (ALL_MAGMAS, QUASIGROUPS):
        batch = [s for s in specs if s.domain == domain]
        if not batch:
            continue
        started = time.monotonic()
        hits: dict[str, tuple[Magma, str]] = {}
        examined = 0
        for m in _domain_stream(domain, max_order):
            examined += 1
            memo: dict[str, bool] = {}
            for spec in batch:
                if spec.id in hits:
                    continue
                for br in spec.branches:
                    if not all(holds(m, p, memo) for p in br.premises):
                        continue
                    if not all(holds(m, c, memo) for c in br.conclusions):
                        hits[spec.id] = (m, br.label)
                        break
        elapsed = time.monotonic() - started
        for spec in batch:
            cx, label = hits.get(spec.id, (None, None))
            reports[spec.id] = VerificationReport(
                spec, max_order, examined, cx, label, elapsed
            )
    return [reports[s.id] for s in specs]


def verify_theorem(theorem_id: str, max_order: int) -> VerificationReport:
    """Sweep one theorem's domain up to max_order."""
    spec = BY_ID.get(theorem_id)
    if spec is None:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    return verify_theorems([spec], max_order)[0]
