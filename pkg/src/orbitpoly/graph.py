"""Proper colorings and acyclic orientations of simple graphs under a group
action, the orbital chromatic polynomial and its reciprocity laws."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterator, NamedTuple

from .counting import ElementSummary, OrbitalResult, ValueRow, check_budget, is_even
from .errors import ActionError, ConsistencyError, InputError, NotPartialOrderError
from .permgroup import LabelMap, Permutation, PermGroup, act_on_map, burnside_count
from .polynomial import RationalPolynomial, evaluate, from_values, scale_add
from .poset import ActionCheck, Poset, is_automorphism, order_polynomial, poset_from_relations, quotient_poset

Orientation = tuple[int, ...]
"""Heads of the edges, aligned with ``SimpleGraph.edges``."""


class CompatiblePair(NamedTuple):
    coloring: LabelMap
    orientation: Orientation


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on ``0..vertex_count-1``; each edge is stored
    as ``(u, v)`` with ``u < v`` and the edge tuple is sorted."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> SimpleGraph:
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge ({u}, {v}) outside range({vertex_count})")
            if u == v:
                raise InputError(f"loop at vertex {u}: graphs must be simple")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise InputError(f"duplicate edge {e}")
            norm.add(e)
        return cls(vertex_count, tuple(sorted(norm)))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index


def cycle_graph(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def is_graph_action(graph: SimpleGraph, G: PermGroup) -> ActionCheck:
    """Every element maps edges to edges; witness ``(g, u, v)`` otherwise."""
    if G.m != graph.vertex_count:
        return ActionCheck(False, (None, G.m, graph.vertex_count))
    for g in G:
        for u, v in graph.edges:
            if not graph.has_edge(g(u), g(v)):
                return ActionCheck(False, (g, u, v))
    return ActionCheck(True)


def _require_action(graph: SimpleGraph, G: PermGroup) -> None:
    check = is_graph_action(graph, G)
    if not check:
        g, u, v = check.witness
        if g is None:
            raise ActionError(f"group degree {u} does not match vertex count {v}", check.witness)
        raise ActionError(
            f"{g.cycle_notation()} is not a graph automorphism: edge {u}-{v} maps to non-edge {g(u)}-{g(v)}",
            check.witness,
        )


def iter_proper_colorings(graph: SimpleGraph, n: int) -> Iterator[LabelMap]:
    m = graph.vertex_count
    if m == 0:
        yield ()
        return
    earlier = [tuple(w for w in graph.neighbours[v] if w < v) for v in range(m)]
    values = [0] * m

    def rec(v):
        used = {values[w] for w in earlier[v]}
        for c in range(1, n + 1):
            if c in used:
                continue
            values[v] = c
            if v + 1 == m:
                yield tuple(values)
            else:
                yield from rec(v + 1)

    yield from rec(0)


def proper_colorings(graph: SimpleGraph, n: int) -> list[LabelMap]:
    """All proper n-colorings in lexicographic order."""
    return list(iter_proper_colorings(graph, n))


def _reaches(adj: list[list[int]], src: int, dst: int) -> bool:
    stack, seen = [src], {src}
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def is_acyclic(graph: SimpleGraph, sigma: Orientation) -> bool:
    adj: list[list[int]] = [[] for _ in range(graph.vertex_count)]
    indeg = [0] * graph.vertex_count
    for (u, v), h in zip(graph.edges, sigma):
        t = u if h == v else v
        adj[t].append(h)
        indeg[h] += 1
    stack = [x for x in range(graph.vertex_count) if indeg[x] == 0]
    seen = 0
    while stack:
        x = stack.pop()
        seen += 1
        for y in adj[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    return seen == graph.vertex_count


def acyclic_orientations(graph: SimpleGraph) -> list[Orientation]:
    """All acyclic orientations. Edges are oriented one at a time and an arc
    ``t -> h`` is rejected when ``h`` already reaches ``t``."""
    adj: list[list[int]] = [[] for _ in range(graph.vertex_count)]
    heads = [0] * len(graph.edges)
    out = []

    def rec(i):
        if i == len(graph.edges):
            out.append(tuple(heads))
            return
        u, v = graph.edges[i]
        for t, h in ((u, v), (v, u)):
            if _reaches(adj, h, t):
                continue
            adj[t].append(h)
            heads[i] = h
            rec(i + 1)
            adj[t].pop()

    rec(0)
    return out


def orientation_poset(graph: SimpleGraph, sigma: Orientation) -> Poset:
    """Reachability order of the oriented graph."""
    arcs = [(u if h == v else v, h) for (u, v), h in zip(graph.edges, sigma)]
    for (u, v), h in zip(graph.edges, sigma):
        if h not in (u, v):
            raise InputError(f"head {h} is not an endpoint of edge {(u, v)}")
    try:
        return poset_from_relations(graph.vertex_count, arcs)
    except NotPartialOrderError as exc:
        raise InputError(f"orientation has a directed cycle: {exc}") from exc


def act_on_orientation(graph: SimpleGraph, g: Permutation, sigma: Orientation) -> Orientation:
    """``(g.sigma)(e) = g(sigma(g^{-1} e))`` with edges mapped setwise."""
    # Edge e' with head h goes to edge g(e') with head g(h).
    out = [0] * len(sigma)
    index = graph.edge_index
    for (u, v), h in zip(graph.edges, sigma):
        a, b = g(u), g(v)
        out[index[(min(a, b), max(a, b))]] = g(h)
    return tuple(out)


def act_on_pair(graph: SimpleGraph, g: Permutation, pair: CompatiblePair) -> CompatiblePair:
    return CompatiblePair(act_on_map(g, pair.coloring), act_on_orientation(graph, g, pair.orientation))


def is_weakly_compatible(graph: SimpleGraph, coloring: LabelMap, sigma: Orientation) -> bool:
    for (u, v), h in zip(graph.edges, sigma):
        if coloring[u] < coloring[v] and h != v:
            return False
        if coloring[v] < coloring[u] and h != u:
            return False
    return True


def weakly_compatible_pairs(graph: SimpleGraph, n: int, budget: int | None = None) -> list[CompatiblePair]:
    """All (coloring, acyclic orientation) pairs where every strict colour
    increase along an edge points at the edge's head."""
    sigmas = acyclic_orientations(graph)
    check_budget(max(n, 0) ** graph.vertex_count * len(sigmas), budget, "coloring/orientation pairs")
    return [
        CompatiblePair(c, s)
        for c in product(range(1, n + 1), repeat=graph.vertex_count)
        for s in sigmas
        if is_weakly_compatible(graph, c, s)
    ]


def fixed_orientations(graph: SimpleGraph, g: Permutation, sigmas=None) -> list[Orientation]:
    sigmas = acyclic_orientations(graph) if sigmas is None else sigmas
    return [s for s in sigmas if act_on_orientation(graph, g, s) == s]


def _signed_double_sum(graph: SimpleGraph, G: PermGroup, signed: bool):
    sigmas = acyclic_orientations(graph)
    summaries = []
    for g in G:
        fixed = fixed_orientations(graph, g, sigmas)
        terms = []
        for s in fixed:
            P = orientation_poset(graph, s)
            if not is_automorphism(P, g):
                raise ConsistencyError(f"{g.cycle_notation()} fixes {s} but is not an automorphism of its poset")
            terms.append((1, order_polynomial(quotient_poset(P, g).poset, True)))
        poly = scale_add(terms)
        summaries.append(ElementSummary(g, g.cycle_count, poly, len(fixed)))
    total = scale_add(
        (Fraction(g.sign if signed else 1, G.order), s.polynomial) for g, s in zip(G, summaries)
    )
    return total, summaries


def fixed_coloring_count(graph: SimpleGraph, g: Permutation, n: int) -> int:
    return sum(1 for c in iter_proper_colorings(graph, n) if act_on_map(g, c) == c)


def chromatic_oracle(graph: SimpleGraph, G: PermGroup, n: int, budget: int | None = None) -> int:
    """Burnside count of proper n-colorings from directly filtered fixed colorings."""
    check_budget(max(n, 0) ** graph.vertex_count, budget, "colorings")
    colorings = proper_colorings(graph, n)
    return burnside_count(G, lambda g: sum(1 for c in colorings if act_on_map(g, c) == c))


def _check_degree(poly: RationalPolynomial, d: int, what: str) -> None:
    if poly.degree != d or (d and poly.leading_coefficient <= 0):
        raise ConsistencyError(f"{what} {poly} has degree {poly.degree}, expected {d}")


def orbital_chromatic_polynomial(
    graph: SimpleGraph,
    G: PermGroup,
    verify: bool = True,
    max_n: int | None = None,
    budget: int | None = None,
) -> OrbitalResult:
    """Orbit count of proper colorings as a polynomial in n.

    Computed by summing strict order polynomials of quotients of the posets of
    g-fixed acyclic orientations. With ``verify`` the Burnside count of fixed
    colorings is interpolated at ``n = 1..|V|+1`` and must coincide
    coefficientwise.
    """
    _require_action(graph, G)
    poly, summaries = _signed_double_sum(graph, G, signed=False)
    _check_degree(poly, graph.vertex_count, "orbital chromatic polynomial")
    if verify:
        nodes = [chromatic_oracle(graph, G, n, budget) for n in range(1, graph.vertex_count + 2)]
        oracle_poly = from_values(nodes)
        if oracle_poly != poly:
            raise ConsistencyError(f"double sum {poly} differs from Burnside interpolant {oracle_poly}")
    max_n = graph.vertex_count + 1 if max_n is None else max_n
    rows = []
    for n in range(1, max_n + 1):
        oracle = chromatic_oracle(graph, G, n, budget) if verify else None
        rows.append(ValueRow(n, evaluate(poly, n), oracle))
    return OrbitalResult(poly, tuple(summaries), tuple(rows), verify)


def even_proper_coloring_orbits(graph: SimpleGraph, G: PermGroup, n: int, budget: int | None = None) -> int:
    """``|Col_{n,+} / G|`` by enumeration and canonicalization."""
    _require_action(graph, G)
    check_budget(max(n, 0) ** graph.vertex_count, budget, "colorings")
    count = 0
    for c in iter_proper_colorings(graph, n):
        if min(act_on_map(g, c) for g in G) == c and is_even(c, G, act_on_map):
            count += 1
    return count


def even_chromatic_polynomial(graph: SimpleGraph, G: PermGroup, budget: int | None = None) -> RationalPolynomial:
    """Interpolant of the even proper coloring orbit counts at ``n = 1..|V|+1``."""
    poly = from_values([even_proper_coloring_orbits(graph, G, n, budget) for n in range(1, graph.vertex_count + 2)])
    _check_degree(poly, graph.vertex_count, "even orbital chromatic polynomial")
    return poly


def even_chromatic_formula(graph: SimpleGraph, G: PermGroup) -> RationalPolynomial:
    """Sign-weighted version of the orientation double sum."""
    _require_action(graph, G)
    return _signed_double_sum(graph, G, signed=True)[0]


def pair_orbit_counts(graph: SimpleGraph, G: PermGroup, n: int, budget: int | None = None) -> tuple[int, int]:
    """``(|Sigma_n / G|, |Sigma_{n,+} / G|)`` by canonicalization."""
    total = even = 0
    for pair in weakly_compatible_pairs(graph, n, budget):
        images = [act_on_pair(graph, g, pair) for g in G]
        if min(images) != pair:
            continue
        total += 1
        if not any(g.sign == -1 and img == pair for g, img in zip(G, images)):
            even += 1
    return total, even


@dataclass(frozen=True)
class GraphReciprocityRow:
    n: int
    chromatic_at_minus_n: Fraction
    signed_even_pair_orbits: int
    even_chromatic_at_minus_n: Fraction
    signed_pair_orbits: int

    @property
    def passed(self) -> bool:
        return (
            self.chromatic_at_minus_n == self.signed_even_pair_orbits
            and self.even_chromatic_at_minus_n == self.signed_pair_orbits
        )


@dataclass(frozen=True)
class GraphReciprocityReport:
    chromatic: RationalPolynomial
    even_chromatic: RationalPolynomial
    rows: tuple[GraphReciprocityRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)


def verify_graph_reciprocity(
    graph: SimpleGraph, G: PermGroup, n_max: int, budget: int | None = None
) -> GraphReciprocityReport:
    chi = orbital_chromatic_polynomial(graph, G, verify=True, max_n=0, budget=budget).polynomial
    chi_even = even_chromatic_polynomial(graph, G, budget)
    s = (-1) ** graph.vertex_count
    rows = []
    for n in range(1, n_max + 1):
        total, even = pair_orbit_counts(graph, G, n, budget)
        rows.append(GraphReciprocityRow(n, evaluate(chi, -n), s * even, evaluate(chi_even, -n), s * total))
    return GraphReciprocityReport(chi, chi_even, tuple(rows))
