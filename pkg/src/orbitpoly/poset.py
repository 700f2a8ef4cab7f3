"""Finite posets, quotient posets and order preserving maps into chains."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .errors import ActionError, ConsistencyError, NotPartialOrderError
from .permgroup import LabelMap, Permutation, PermGroup, cycles
from .polynomial import RationalPolynomial, from_values


@dataclass(frozen=True)
class Poset:
    """Elements are ``0..size-1``; ``less_than`` holds every pair ``(p, q)``
    with ``p < q`` (the relation is stored transitively closed)."""

    size: int
    less_than: frozenset[tuple[int, int]]

    def __post_init__(self):
        rel = self.less_than
        for p, q in rel:
            if not (0 <= p < self.size and 0 <= q < self.size):
                raise NotPartialOrderError(f"relation ({p}, {q}) outside range({self.size})")
            if p == q:
                raise NotPartialOrderError(f"not a partial order: {p} < {p}")
            if (q, p) in rel:
                raise NotPartialOrderError(f"not a partial order: {p} < {q} < {p}")
        for p, q in rel:
            for r in self.above[q]:
                if (p, r) not in rel:
                    raise NotPartialOrderError(f"relation not transitive at {p} < {q} < {r}")

    def lt(self, p: int, q: int) -> bool:
        return (p, q) in self.less_than

    def comparable(self, p: int, q: int) -> bool:
        return (p, q) in self.less_than or (q, p) in self.less_than

    @cached_property
    def below(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(p for p, q in self.less_than if q == x)) for x in range(self.size))

    @cached_property
    def above(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(q for p, q in self.less_than if p == x)) for x in range(self.size))

    def is_antichain(self, subset: Iterable[int] | None = None) -> bool:
        if subset is None:
            return not self.less_than
        s = list(subset)
        return not any(self.lt(a, b) for a in s for b in s)

    def is_chain(self) -> bool:
        return all(self.comparable(a, b) for a in range(self.size) for b in range(a + 1, self.size))

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the comparability graph."""
        parent = list(range(self.size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p, q in self.less_than:
            parent[find(p)] = find(q)
        groups: dict[int, list[int]] = {}
        for x in range(self.size):
            groups.setdefault(find(x), []).append(x)
        return tuple(sorted(tuple(g) for g in groups.values()))

    def restrict(self, subset: Iterable[int]) -> Poset:
        """Induced subposet, relabelled ``0..k-1`` in increasing order of ``subset``."""
        elems = sorted(subset)
        idx = {x: i for i, x in enumerate(elems)}
        rel = frozenset((idx[p], idx[q]) for p, q in self.less_than if p in idx and q in idx)
        return Poset(len(elems), rel)

    def __repr__(self):
        return f"Poset(size={self.size}, less_than={sorted(self.less_than)})"


def transitive_closure(size: int, relations: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    reach = [[False] * size for _ in range(size)]
    for p, q in relations:
        reach[p][q] = True
    for k in range(size):
        rk = reach[k]
        for i in range(size):
            if reach[i][k]:
                ri = reach[i]
                for j in range(size):
                    if rk[j]:
                        ri[j] = True
    return {(i, j) for i in range(size) for j in range(size) if reach[i][j]}


def poset_from_relations(size: int, relations: Iterable[tuple[int, int]]) -> Poset:
    """Poset generated by ``relations``; raises NotPartialOrderError on a cycle."""
    rel = [(int(p), int(q)) for p, q in relations]
    for p, q in rel:
        if not (0 <= p < size and 0 <= q < size):
            raise NotPartialOrderError(f"relation ({p}, {q}) outside range({size})")
    closed = transitive_closure(size, rel)
    loops = sorted(p for p, q in closed if p == q)
    if loops:
        raise NotPartialOrderError(f"not a partial order: element {loops[0]} lies on a cycle")
    return Poset(size, frozenset(closed))


def chain(k: int) -> Poset:
    return Poset(k, frozenset((i, j) for i in range(k) for j in range(i + 1, k)))


def antichain(k: int) -> Poset:
    return Poset(k, frozenset())


def disjoint_union(*posets: Poset) -> Poset:
    rel = set()
    offset = 0
    for P in posets:
        rel |= {(p + offset, q + offset) for p, q in P.less_than}
        offset += P.size
    return Poset(offset, frozenset(rel))


@dataclass(frozen=True)
class ActionCheck:
    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def is_automorphism(P: Poset, g: Permutation) -> ActionCheck:
    for p, q in sorted(P.less_than):
        if (g(p), g(q)) not in P.less_than:
            return ActionCheck(False, (g, p, q))
    return ActionCheck(True)


def is_order_action(P: Poset, G: PermGroup) -> ActionCheck:
    """Whether every element of ``G`` maps related pairs to related pairs.
    On failure the witness is ``(g, p, q)`` with ``p < q`` but not ``g p < g q``."""
    if G.m != P.size:
        return ActionCheck(False, (None, G.m, P.size))
    for g in G:
        check = is_automorphism(P, g)
        if not check:
            return check
    return ActionCheck(True)


@dataclass(frozen=True)
class QuotientPoset:
    poset: Poset
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]


def quotient_poset(P: Poset, g: Permutation) -> QuotientPoset:
    """The poset of cycles of ``g``; block ``[x]`` lies below ``[y]`` iff some
    member of ``[x]`` lies below some member of ``[y]``."""
    check = is_automorphism(P, g)
    if not check:
        _, p, q = check.witness
        raise ActionError(
            f"{g.cycle_notation()} is not an automorphism: {p} < {q} but not {g(p)} < {g(q)}",
            check.witness,
        )
    part = cycles(g)
    for block in part.blocks:
        if not P.is_antichain(block):
            raise ConsistencyError(f"cycle {block} of an automorphism is not an antichain")
    block_of = [0] * P.size
    for i, block in enumerate(part.blocks):
        for x in block:
            block_of[x] = i
    rel = {(block_of[p], block_of[q]) for p, q in P.less_than}
    try:
        Q = poset_from_relations(len(part.blocks), rel)
    except NotPartialOrderError as exc:
        raise ConsistencyError(f"quotient relation is not a partial order: {exc}") from exc
    return QuotientPoset(Q, part.blocks, tuple(block_of))


def _bounds_plan(P: Poset, order: list[int]):
    """For each position, the earlier-placed elements below and above it."""
    pos = {x: i for i, x in enumerate(order)}
    plan = []
    for i, x in enumerate(order):
        lows = tuple(p for p in P.below[x] if pos[p] < i)
        highs = tuple(q for q in P.above[x] if pos[q] < i)
        plan.append((x, lows, highs))
    return plan


def iter_homs(P: Poset, n: int, strict: bool = False) -> Iterator[LabelMap]:
    """(Strictly) order preserving maps ``P -> {1..n}`` in lexicographic order."""
    m = P.size
    if m == 0:
        yield ()
        return
    if n <= 0:
        return
    gap = 1 if strict else 0
    plan = _bounds_plan(P, list(range(m)))
    values = [0] * m

    def rec(i):
        x, lows, highs = plan[i]
        lo = max((values[p] + gap for p in lows), default=1)
        hi = min((values[q] - gap for q in highs), default=n)
        for v in range(lo, hi + 1):
            values[x] = v
            if i + 1 == m:
                yield tuple(values)
            else:
                yield from rec(i + 1)

    yield from rec(0)


def enumerate_homs(P: Poset, n: int, strict: bool = False) -> list[LabelMap]:
    return list(iter_homs(P, n, strict))


def _count_connected(P: Poset, n: int, strict: bool) -> int:
    m = P.size
    gap = 1 if strict else 0
    # Any linear extension works for counting; below-first keeps upper bounds unused.
    order = sorted(range(m), key=lambda x: (len(P.below[x]), x))
    plan = _bounds_plan(P, order)
    values = [0] * m

    def rec(i):
        x, lows, highs = plan[i]
        lo = max((values[p] + gap for p in lows), default=1)
        hi = min((values[q] - gap for q in highs), default=n)
        if hi < lo:
            return 0
        if i + 1 == m:
            return hi - lo + 1
        total = 0
        for v in range(lo, hi + 1):
            values[x] = v
            total += rec(i + 1)
        return total

    return rec(0)


@lru_cache(maxsize=65536)
def count_homs(P: Poset, n: int, strict: bool = False) -> int:
    """Number of (strictly) order preserving maps ``P -> {1..n}``.

    Multiplicative over connected components.
    """
    if P.size == 0:
        return 1
    if n <= 0:
        return 0
    comps = P.components
    if len(comps) == 1:
        return _count_connected(P, n, strict)
    total = 1
    for comp in comps:
        total *= count_homs(P.restrict(comp), n, strict)
        if total == 0:
            break
    return total


@lru_cache(maxsize=4096)
def order_polynomial(P: Poset, strict: bool = False) -> RationalPolynomial:
    """Interpolant of the hom counts at ``n = 1..|P|+1``; degree is checked to be ``|P|``."""
    values = [count_homs(P, n, strict) for n in range(1, P.size + 2)]
    poly = from_values(values, start=1)
    if poly.degree != P.size:
        raise ConsistencyError(
            f"order polynomial of a {P.size}-element poset has degree {poly.degree}"
        )
    return poly
