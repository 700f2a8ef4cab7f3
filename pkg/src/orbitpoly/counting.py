"""Orbital order polynomials and their reciprocity.

Two independent routes are kept side by side: the group average of order
polynomials of quotient posets, and direct enumeration of maps followed by
orbit canonicalization.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ActionError, BudgetExceededError, ConsistencyError
from .permgroup import (
    LabelMap,
    Permutation,
    PermGroup,
    act_on_map,
    canonical_form,
)
from .polynomial import RationalPolynomial, evaluate, scale_add
from .poset import Poset, count_homs, is_order_action, iter_homs, order_polynomial, quotient_poset

DEFAULT_BUDGET = 2_000_000


def default_budget() -> int:
    return int(os.environ.get("ORBITPOLY_BUDGET", DEFAULT_BUDGET))


def check_budget(size: int, budget: int | None, what: str = "maps") -> None:
    budget = default_budget() if budget is None else budget
    if size > budget:
        raise BudgetExceededError(f"enumerating {size} {what} exceeds the budget of {budget}")


@dataclass(frozen=True)
class ElementSummary:
    element: Permutation
    cycle_count: int
    polynomial: RationalPolynomial
    fixed_orientations: int | None = None


@dataclass(frozen=True)
class ValueRow:
    n: int
    formula: Fraction
    oracle: int | None = None

    @property
    def agrees(self) -> bool:
        return self.oracle is None or self.formula == self.oracle


@dataclass(frozen=True)
class OrbitalResult:
    polynomial: RationalPolynomial
    per_element: tuple[ElementSummary, ...]
    value_table: tuple[ValueRow, ...] = ()
    verified: bool = field(default=False)

    def __post_init__(self):
        bad = [r for r in self.value_table if not r.agrees]
        if bad:
            r = bad[0]
            raise ConsistencyError(f"formula gives {r.formula} but enumeration gives {r.oracle} at n={r.n}")


def _require_action(P: Poset, G: PermGroup) -> None:
    check = is_order_action(P, G)
    if not check:
        g, p, q = check.witness
        if g is None:
            raise ActionError(f"group degree {p} does not match poset size {q}", check.witness)
        raise ActionError(
            f"{g.cycle_notation()} does not act by automorphisms: {p} < {q} but not {g(p)} < {g(q)}",
            check.witness,
        )


def orbital_order_polynomial(
    P: Poset,
    G: PermGroup,
    strict: bool = False,
    verify: bool = False,
    max_n: int | None = None,
    budget: int | None = None,
) -> OrbitalResult:
    """Number of G-orbits of (strictly) order preserving maps as a polynomial in n,
    computed as the group average of the quotient posets' order polynomials.

    With ``verify`` the value table also carries orbit counts by enumeration.
    """
    _require_action(P, G)
    summaries = []
    for g in G:
        Q = quotient_poset(P, g).poset
        summaries.append(ElementSummary(g, Q.size, order_polynomial(Q, strict)))
    poly = scale_add((Fraction(1, G.order), s.polynomial) for s in summaries)
    if poly.degree != P.size or (P.size and poly.leading_coefficient <= 0):
        raise ConsistencyError(f"orbital polynomial {poly} has degree {poly.degree}, expected {P.size}")
    max_n = P.size + 1 if max_n is None else max_n
    rows = []
    for n in range(1, max_n + 1):
        oracle = orbit_count_oracle(P, G, n, strict, budget) if verify else None
        rows.append(ValueRow(n, evaluate(poly, n), oracle))
    return OrbitalResult(poly, tuple(summaries), tuple(rows), verify)


def orbit_count_oracle(
    P: Poset, G: PermGroup, n: int, strict: bool = False, budget: int | None = None
) -> int:
    """Orbit count by enumerating every map and keeping the lexicographically
    least member of each orbit. No fixpoint averaging involved."""
    check_budget(max(n, 0) ** P.size, budget)
    return sum(1 for phi in iter_homs(P, n, strict) if canonical_form(G, phi) == phi)


def fixed_hom_count(P: Poset, g: Permutation, n: int, strict: bool = False) -> int:
    """``|Hom(P,[n])^g|``, read off the quotient poset by ``g``."""
    return count_homs(quotient_poset(P, g).poset, n, strict)


def fixed_hom_count_direct(P: Poset, g: Permutation, n: int, strict: bool = False) -> int:
    return sum(1 for phi in iter_homs(P, n, strict) if act_on_map(g, phi) == phi)


def is_even(obj, G: PermGroup, act) -> bool:
    """True iff every element of ``G`` fixing ``obj`` under ``act`` has sign +1."""
    return not any(g.sign == -1 and act(g, obj) == obj for g in G)


def is_even_map(phi: LabelMap, G: PermGroup) -> bool:
    return is_even(tuple(phi), G, act_on_map)


def even_orbit_count(
    P: Poset, G: PermGroup, n: int, strict: bool = False, budget: int | None = None
) -> int:
    """``|Hom_+(P,[n]) / G|`` (or the strict variant) by enumeration."""
    check_budget(max(n, 0) ** P.size, budget)
    return sum(
        1
        for phi in iter_homs(P, n, strict)
        if canonical_form(G, phi) == phi and is_even_map(phi, G)
    )


@dataclass(frozen=True)
class ReciprocityRow:
    n: int
    weak_at_minus_n: Fraction
    signed_even_strict_orbits: int
    strict_at_minus_n: Fraction
    signed_even_weak_orbits: int

    @property
    def passed(self) -> bool:
        return (
            self.weak_at_minus_n == self.signed_even_strict_orbits
            and self.strict_at_minus_n == self.signed_even_weak_orbits
        )


@dataclass(frozen=True)
class ReciprocityReport:
    weak: RationalPolynomial
    strict: RationalPolynomial
    rows: tuple[ReciprocityRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)


def verify_reciprocity(
    P: Poset, G: PermGroup, n_max: int, budget: int | None = None
) -> ReciprocityReport:
    """Compare the orbital polynomials at ``-n`` with signed counts of orbits
    of even maps of the opposite kind, for ``n = 1..n_max``."""
    weak = orbital_order_polynomial(P, G, strict=False).polynomial
    strict = orbital_order_polynomial(P, G, strict=True).polynomial
    s = (-1) ** P.size
    rows = []
    for n in range(1, n_max + 1):
        rows.append(
            ReciprocityRow(
                n,
                evaluate(weak, -n),
                s * even_orbit_count(P, G, n, strict=True, budget=budget),
                evaluate(strict, -n),
                s * even_orbit_count(P, G, n, strict=False, budget=budget),
            )
        )
    return ReciprocityReport(weak, strict, tuple(rows))


def polya_count(G: PermGroup, n: int) -> Fraction:
    """Group average of ``n ** c(g)``."""
    return Fraction(sum(n ** g.cycle_count for g in G), G.order)
