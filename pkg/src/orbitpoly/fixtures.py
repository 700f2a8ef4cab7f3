"""Small posets and graphs with symmetry groups, used by the test suite, the
experiment scripts and the bundled JSON files."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import SimpleGraph, complete_graph, cycle_graph, path_graph
from .permgroup import (
    Permutation,
    PermGroup,
    closure,
    cyclic_group,
    dihedral_group,
    parse_cycle_notation,
    symmetric_group,
    trivial_group,
)
from .poset import Poset, antichain, chain, disjoint_union, poset_from_relations


def gens(m: int, *cycle_specs: str) -> PermGroup:
    """Group from generators written with integer cycle notation, e.g. ``"(0 1)(2 3)"``."""
    return closure([parse_cycle_notation(s, None, m) for s in cycle_specs], m)


@dataclass(frozen=True)
class PosetCase:
    name: str
    poset: Poset
    group: PermGroup


@dataclass(frozen=True)
class GraphCase:
    name: str
    graph: SimpleGraph
    group: PermGroup


def poset_suite() -> list[PosetCase]:
    two_chains = disjoint_union(chain(2), chain(2))  # 0<1, 2<3
    fork = poset_from_relations(3, [(0, 1), (0, 2)])
    join = poset_from_relations(3, [(0, 2), (1, 2)])
    diamond = poset_from_relations(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    bowtie = poset_from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    star3 = poset_from_relations(4, [(0, 1), (0, 2), (0, 3)])
    star4 = poset_from_relations(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    y_shape = poset_from_relations(5, [(0, 1), (1, 2), (0, 3), (3, 4)])
    k23 = poset_from_relations(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    chains_point = disjoint_union(chain(2), chain(2), antichain(1))
    three_chains = disjoint_union(chain(1), chain(2), chain(2))
    return [
        PosetCase("antichain1-trivial", antichain(1), trivial_group(1)),
        PosetCase("antichain2-S2", antichain(2), symmetric_group(2)),
        PosetCase("antichain3-S3", antichain(3), symmetric_group(3)),
        PosetCase("antichain3-C3", antichain(3), cyclic_group(3)),
        PosetCase("antichain4-double-swap", antichain(4), gens(4, "(0 1)(2 3)")),
        PosetCase("antichain4-S4", antichain(4), symmetric_group(4)),
        PosetCase("antichain5-C5", antichain(5), cyclic_group(5)),
        PosetCase("antichain5-S2xS3", antichain(5), gens(5, "(0 1)", "(2 3 4)", "(2 3)")),
        PosetCase("chain3-trivial", chain(3), trivial_group(3)),
        PosetCase("two-chains-swap", two_chains, gens(4, "(0 2)(1 3)")),
        PosetCase("two-chains-trivial", two_chains, trivial_group(4)),
        PosetCase("fork-swap", fork, gens(3, "(1 2)")),
        PosetCase("join-swap", join, gens(3, "(0 1)")),
        PosetCase("diamond-swap", diamond, gens(4, "(1 2)")),
        PosetCase("diamond-trivial", diamond, trivial_group(4)),
        PosetCase("bowtie-V4", bowtie, gens(4, "(0 1)", "(2 3)")),
        PosetCase("bowtie-double-swap", bowtie, gens(4, "(0 1)(2 3)")),
        PosetCase("star3-S3", star3, symmetric_group(3, 4, offset=1)),
        PosetCase("star3-C3", star3, cyclic_group(3, 4, offset=1)),
        PosetCase("star4-C4", star4, cyclic_group(4, 5, offset=1)),
        PosetCase("star4-two-swaps", star4, gens(5, "(1 2)", "(3 4)")),
        PosetCase("y-branch-swap", y_shape, gens(5, "(1 3)(2 4)")),
        PosetCase("k23-full", k23, gens(5, "(0 1)", "(2 3 4)", "(2 3)")),
        PosetCase("k23-C3", k23, gens(5, "(2 3 4)")),
        PosetCase("chains-point-swap", chains_point, gens(5, "(0 2)(1 3)")),
        PosetCase("point-two-chains-swap", three_chains, gens(5, "(1 3)(2 4)")),
    ]


def graph_suite() -> list[GraphCase]:
    edge = SimpleGraph.from_edges(2, [(0, 1)])
    star = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    bowtie = SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    k23 = SimpleGraph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    paw = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    return [
        GraphCase("edge-trivial", edge, trivial_group(2)),
        GraphCase("edge-swap", edge, symmetric_group(2)),
        GraphCase("edgeless3-S3", SimpleGraph(3, ()), symmetric_group(3)),
        GraphCase("path3-flip", path_graph(3), gens(3, "(0 2)")),
        GraphCase("path4-flip", path_graph(4), gens(4, "(0 3)(1 2)")),
        GraphCase("triangle-trivial", cycle_graph(3), trivial_group(3)),
        GraphCase("triangle-C3", cycle_graph(3), cyclic_group(3)),
        GraphCase("triangle-D3", cycle_graph(3), dihedral_group(3)),
        GraphCase("square-D4", cycle_graph(4), dihedral_group(4)),
        GraphCase("square-C4", cycle_graph(4), cyclic_group(4)),
        GraphCase("square-diagonal-flip", cycle_graph(4), gens(4, "(1 3)")),
        GraphCase("square-half-turn", cycle_graph(4), gens(4, "(0 2)(1 3)")),
        GraphCase("pentagon-D5", cycle_graph(5), dihedral_group(5)),
        GraphCase("pentagon-C5", cycle_graph(5), cyclic_group(5)),
        GraphCase("star-S3", star, symmetric_group(3, 4, offset=1)),
        GraphCase("paw-swap", paw, gens(4, "(0 1)")),
        GraphCase("K4-S4", complete_graph(4), symmetric_group(4)),
        GraphCase("K4-double-swap", complete_graph(4), gens(4, "(0 1)(2 3)")),
        GraphCase("bowtie-wings", bowtie, gens(5, "(1 2)", "(3 4)", "(1 3)(2 4)")),
        GraphCase("k23-full", k23, gens(5, "(0 1)", "(2 3 4)", "(2 3)")),
        GraphCase("K5-C5", complete_graph(5), cyclic_group(5)),
    ]


def random_poset(size: int, rng: random.Random, density: float = 0.4) -> Poset:
    """Random poset from a random relation set oriented along a shuffled order."""
    order = list(range(size))
    rng.shuffle(order)
    rel = [
        (order[i], order[j])
        for i in range(size)
        for j in range(i + 1, size)
        if rng.random() < density
    ]
    return poset_from_relations(size, rel)


def random_permutation(m: int, rng: random.Random) -> Permutation:
    images = list(range(m))
    rng.shuffle(images)
    return Permutation(tuple(images))


def small_poset_suite(count: int = 63, max_size: int = 4, seed: int = 20240601) -> list[Poset]:
    """``count`` distinct labelled posets on at most ``max_size`` elements:
    every chain and antichain, then random relation sets."""
    rng = random.Random(seed)
    seen: dict[Poset, None] = {}
    for k in range(max_size + 1):
        seen.setdefault(chain(k))
        seen.setdefault(antichain(k))
    while len(seen) < count:
        size = rng.randint(1, max_size)
        seen.setdefault(random_poset(size, rng, density=rng.random()))
    return list(seen)[:count]
