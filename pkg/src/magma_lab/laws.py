"""The property vocabulary: equational identities and named structural laws.

A term is either a variable name (a single lowercase letter) or a pair
``(left, right)`` meaning ``left + right``. Equations are universally
quantified over their variables.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field

APPLY = -1


def term_variables(term) -> list[str]:
    """Variables in first-occurrence order, left side of a pair first."""
    out: list[str] = []
    stack = [term]
    while stack:
        t = stack.pop()
        if isinstance(t, str):
            if t not in out:
                out.append(t)
        else:
            stack.append(t[1])
            stack.append(t[0])
    return out


def _postfix(term, slot: dict) -> tuple:
    if isinstance(term, str):
        return (slot[term],)
    return _postfix(term[0], slot) + _postfix(term[1], slot) + (APPLY,)


@dataclass(frozen=True)
class Equation:
    """An identity lhs = rhs between two terms."""

    lhs: object
    rhs: object
    variables: tuple = field(init=False, compare=False, repr=False)
    lhs_code: tuple = field(init=False, compare=False, repr=False)
    rhs_code: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        seen: list[str] = []
        for v in term_variables(self.lhs) + term_variables(self.rhs):
            if v not in seen:
                seen.append(v)
        slot = {v: i for i, v in enumerate(seen)}
        object.__setattr__(self, "variables", tuple(seen))
        object.__setattr__(self, "lhs_code", _postfix(self.lhs, slot))
        object.__setattr__(self, "rhs_code", _postfix(self.rhs, slot))


def _rename(term, mapping):
    if isinstance(term, str):
        return mapping[term]
    return (_rename(term[0], mapping), _rename(term[1], mapping))


def alpha_normalized(eq: Equation) -> Equation:
    """Rename variables to a, b, c, ... by first occurrence."""
    mapping = dict(zip(eq.variables, string.ascii_lowercase))
    return Equation(_rename(eq.lhs, mapping), _rename(eq.rhs, mapping))


@dataclass(frozen=True)
class Law:
    """A checkable property: a named built-in or a user equation."""

    tag: str
    equation: Equation | None = None

    @property
    def is_equational(self) -> bool:
        return self.equation is not None

    def __str__(self) -> str:
        return self.tag


def user_law(eq: Equation) -> Law:
    return Law("USER", eq)


# The seven identity laws. All other built-ins are structural conditions
# decided by dedicated checks rather than by a single equation.
A = Law("A", Equation(("a", ("b", "c")), (("a", "b"), "c")))
C = Law("C", Equation(("a", "b"), ("b", "a")))
CAI = Law("CAI", Equation(("a", ("b", "c")), ("c", ("a", "b"))))
CAII = Law("CAII", Equation(("a", ("b", "c")), (("c", "a"), "b")))
AGI = Law("AGI", Equation(("a", ("b", "c")), ("c", ("b", "a"))))
AGII = Law("AGII", Equation(("a", ("b", "c")), (("b", "a"), "c")))
R = Law("R", Equation((("a", "b"), "c"), ("a", ("c", "b"))))

NE = Law("NE")          # two-sided neutral element exists
IN = Law("IN")          # two-sided neutral exists and every element has a two-sided inverse
H = Law("H")            # every x + a = b and a + y = b uniquely solvable (Latin table)
CA = Law("CA")          # cancellative on both sides
LOOP = Law("LOOP")      # H together with NE
GROUP = Law("GROUP")    # associative monoid with inverses
ABELIAN = Law("ABELIAN")  # commutative group

EQUATIONAL_LAWS: tuple[Law, ...] = (A, C, CAI, CAII, AGI, AGII, R)
IDENTITY_LAWS: tuple[Law, ...] = (CAI, CAII, AGI, AGII, R)
ALL_LAWS: tuple[Law, ...] = (A, C, NE, IN, CAI, CAII, AGI, AGII, R, H, CA, LOOP, GROUP, ABELIAN)

BY_NAME: dict[str, Law] = {law.tag: law for law in ALL_LAWS}
