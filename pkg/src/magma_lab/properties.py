"""Decision procedures for the built-in laws, with reproducible witnesses.

Failure witnesses are always the lexicographically first failing variable
assignment (last variable varying fastest), so repeated runs and different
implementations of the same scan agree byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Magma
from .laws import (
    ABELIAN,
    CA,
    GROUP,
    H,
    IN,
    LOOP,
    NE,
    A,
    C,
    Equation,
    Law,
)

CLASS_LABELS = (
    "magma",
    "commutative",
    "semigroup",
    "monoid",
    "group",
    "abelian-group",
    "quasigroup",
    "loop",
)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one law check on one magma.

    ``witness`` is present iff ``holds`` is false. For equational laws it
    assigns every variable. For H and CA it names three elements a, b, c
    such that the products collide on the side given in ``detail``:
    row/left means op(a,b) == op(a,c) with b != c, column/right means
    op(b,a) == op(c,a) with b != c.
    """

    order: int
    law: Law
    holds: bool
    witness: dict | None = None
    detail: dict | None = None


@dataclass(frozen=True)
class NeutralReport:
    """Left and right neutral elements, reported separately."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    two_sided: int | None


@dataclass(frozen=True)
class LocalIdentities:
    """Solutions of a + x = a (right) and y + a = a (left) for a fixed a."""

    element: int
    right_solutions: tuple[int, ...]
    left_solutions: tuple[int, ...]

    @property
    def right_unique(self) -> bool:
        return len(self.right_solutions) == 1

    @property
    def left_unique(self) -> bool:
        return len(self.left_solutions) == 1


@dataclass(frozen=True)
class StructureReport:
    """Classification labels plus the neutral/inverse data behind them."""

    order: int
    labels: tuple[str, ...]
    neutrals: NeutralReport
    inverses: tuple | None  # inverses[a] = some two-sided inverse of a, or None


def _equation_failure(m: Magma, eq: Equation):
    """First assignment violating eq, or None. Shared by report and holds paths."""
    n = m.order
    t = m.table
    lhs_code = eq.lhs_code
    rhs_code = eq.rhs_code
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for env in product(range(n), repeat=len(eq.variables)):
        stack.clear()
        for c in lhs_code:
            if c >= 0:
                push(env[c])
            else:
                b = pop()
                a = pop()
                push(t[a * n + b])
        left = stack[0]
        stack.clear()
        for c in rhs_code:
            if c >= 0:
                push(env[c])
            else:
                b = pop()
                a = pop()
                push(t[a * n + b])
        if left != stack[0]:
            return env
    return None


def check_identity_law(m: Magma, law: Law) -> CheckReport:
    """Check a purely equational law over all assignments."""
    if law.equation is None:
        raise ValueError(f"law {law.tag} is not purely equational")
    env = _equation_failure(m, law.equation)
    if env is None:
        return CheckReport(m.order, law, True)
    witness = dict(zip(law.equation.variables, env))
    return CheckReport(m.order, law, False, witness)


def find_neutrals(m: Magma) -> NeutralReport:
    n = m.order
    t = m.table
    left = tuple(e for e in range(n) if all(t[e * n + b] == b for b in range(n)))
    right = tuple(e for e in range(n) if all(t[b * n + e] == b for b in range(n)))
    two = next((e for e in left if e in right), None)
    return NeutralReport(left, right, two)


def check_inverses(m: Magma, e: int) -> CheckReport:
    """Check that every element has a two-sided inverse for the neutral e."""
    n = m.order
    t = m.table
    rep = find_neutrals(m)
    if rep.two_sided != e:
        raise ValueError(f"element {e} is not a two-sided neutral")
    for a in range(n):
        if not any(t[a * n + b] == e and t[b * n + a] == e for b in range(n)):
            return CheckReport(m.order, IN, False, {"a": a}, {"neutral": e})
    return CheckReport(m.order, IN, True, None, {"neutral": e})


def check_H(m: Magma) -> CheckReport:
    """Unique solvability of x + a = b and a + y = b: rows and columns permute.

    The detail names the first duplicated entry, scanning rows first.
    """
    n = m.order
    t = m.table
    for r in range(n):
        seen = 0
        for c in range(n):
            bit = 1 << t[r * n + c]
            if seen & bit:
                v = t[r * n + c]
                j = next(k for k in range(c) if t[r * n + k] == v)
                detail = {"kind": "row", "index": r, "value": v}
                return CheckReport(m.order, H, False, {"a": r, "b": j, "c": c}, detail)
            seen |= bit
    for c in range(n):
        seen = 0
        for r in range(n):
            bit = 1 << t[r * n + c]
            if seen & bit:
                v = t[r * n + c]
                i = next(k for k in range(r) if t[k * n + c] == v)
                detail = {"kind": "column", "index": c, "value": v}
                return CheckReport(m.order, H, False, {"a": c, "b": i, "c": r}, detail)
            seen |= bit
    return CheckReport(m.order, H, True)


def check_cancellative(m: Magma) -> CheckReport:
    """Both cancellation laws, by pairwise comparison of products."""
    n = m.order
    t = m.table
    for a in range(n):
        row = a * n
        for b in range(n):
            v = t[row + b]
            for c in range(b + 1, n):
                if t[row + c] == v:
                    return CheckReport(
                        m.order, CA, False, {"a": a, "b": b, "c": c}, {"side": "left"}
                    )
    for a in range(n):
        for b in range(n):
            v = t[b * n + a]
            for c in range(b + 1, n):
                if t[c * n + a] == v:
                    return CheckReport(
                        m.order, CA, False, {"a": a, "b": b, "c": c}, {"side": "right"}
                    )
    return CheckReport(m.order, CA, True)


def check_law(m: Magma, law: Law) -> CheckReport:
    """CheckReport for any law, structural and composite ones included.

    Composite laws report the first missing part in the detail; the
    witness, when one exists, comes from that part's own check.
    """
    if law.equation is not None:
        return check_identity_law(m, law)
    tag = law.tag
    if tag == "NE":
        rep = find_neutrals(m)
        detail = {
            "left": list(rep.left),
            "right": list(rep.right),
            "two_sided": rep.two_sided,
        }
        return CheckReport(m.order, law, rep.two_sided is not None, None, detail)
    if tag == "IN":
        rep = find_neutrals(m)
        if rep.two_sided is None:
            return CheckReport(m.order, law, False, None, {"missing": "NE"})
        return check_inverses(m, rep.two_sided)
    if tag == "H":
        return check_H(m)
    if tag == "CA":
        return check_cancellative(m)
    if tag == "LOOP":
        parts = (H, NE)
    elif tag == "GROUP":
        parts = (A, NE, IN)
    elif tag == "ABELIAN":
        parts = (A, C, NE, IN)
    else:
        raise ValueError(f"unknown law {tag!r}")
    for part in parts:
        rep = check_law(m, part)
        if not rep.holds:
            return CheckReport(m.order, law, False, rep.witness, {"missing": part.tag})
    return CheckReport(m.order, law, True)


def local_identities(m: Magma, a: int) -> LocalIdentities:
    n = m.order
    t = m.table
    if not 0 <= a < n:
        raise ValueError(f"element {a} out of range")
    right = tuple(x for x in range(n) if t[a * n + x] == a)
    left = tuple(y for y in range(n) if t[y * n + a] == a)
    return LocalIdentities(a, right, left)


def _two_sided_neutral(m: Magma):
    n = m.order
    t = m.table
    for e in range(n):
        if all(t[e * n + b] == b for b in range(n)) and all(
            t[b * n + e] == b for b in range(n)
        ):
            return e
    return None


def _has_inverses(m: Magma, e: int) -> bool:
    n = m.order
    t = m.table
    return all(
        any(t[a * n + b] == e and t[b * n + a] == e for b in range(n))
        for a in range(n)
    )


def _is_latin(m: Magma) -> bool:
    n = m.order
    t = m.table
    full = (1 << n) - 1
    for r in range(n):
        seen = 0
        for c in range(n):
            seen |= 1 << t[r * n + c]
        if seen != full:
            return False
    for c in range(n):
        seen = 0
        for r in range(n):
            seen |= 1 << t[r * n + c]
        if seen != full:
            return False
    return True


def _is_cancellative(m: Magma) -> bool:
    n = m.order
    t = m.table
    for a in range(n):
        row = a * n
        for b in range(n):
            v = t[row + b]
            for c in range(b + 1, n):
                if t[row + c] == v:
                    return False
    for a in range(n):
        for b in range(n):
            v = t[b * n + a]
            for c in range(b + 1, n):
                if t[c * n + a] == v:
                    return False
    return True


def holds(m: Magma, law: Law, memo: dict | None = None) -> bool:
    """Fast boolean version of the checkers; memo caches built-in tags per magma."""
    tag = law.tag
    if memo is not None and tag != "USER":
        cached = memo.get(tag)
        if cached is not None:
            return cached
    if law.equation is not None:
        result = _equation_failure(m, law.equation) is None
    elif tag == "NE":
        result = _two_sided_neutral(m) is not None
    elif tag == "IN":
        e = _two_sided_neutral(m)
        result = e is not None and _has_inverses(m, e)
    elif tag == "H":
        result = _is_latin(m)
    elif tag == "CA":
        result = _is_cancellative(m)
    elif tag == "LOOP":
        result = holds(m, H, memo) and holds(m, NE, memo)
    elif tag == "GROUP":
        result = holds(m, A, memo) and holds(m, IN, memo)
    elif tag == "ABELIAN":
        result = holds(m, GROUP, memo) and holds(m, C, memo)
    else:
        raise ValueError(f"unknown law {tag!r}")
    if memo is not None and tag != "USER":
        memo[tag] = result
    return result


def classify(m: Magma) -> StructureReport:
    """Name every class from the standard ladder that the table belongs to."""
    neutrals = find_neutrals(m)
    commutative = holds(m, C)
    semigroup = holds(m, A)
    monoid = semigroup and neutrals.two_sided is not None
    quasigroup = _is_latin(m)
    loop = quasigroup and neutrals.two_sided is not None

    inverses = None
    group = False
    if neutrals.two_sided is not None:
        e = neutrals.two_sided
        n = m.order
        t = m.table
        inv = []
        for a in range(n):
            b = next(
                (b for b in range(n) if t[a * n + b] == e and t[b * n + a] == e), None
            )
            inv.append(b)
        inverses = tuple(inv)
        group = monoid and all(b is not None for b in inverses)

    labels = ["magma"]
    if commutative:
        labels.append("commutative")
    if semigroup:
        labels.append("semigroup")
    if monoid:
        labels.append("monoid")
    if group:
        labels.append("group")
    if group and commutative:
        labels.append("abelian-group")
    if quasigroup:
        labels.append("quasigroup")
    if loop:
        labels.append("loop")
    return StructureReport(m.order, tuple(labels), neutrals, inverses)
