"""JSON input files for posets, graphs and groups, and JSON output helpers."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import DegreeMismatchError, InputError, UnknownElementError
from .graph import SimpleGraph
from .permgroup import PermGroup, closure, parse_cycle_notation, trivial_group
from .poset import Poset, poset_from_relations


@dataclass(frozen=True)
class Named:
    """A poset or graph together with the user's element names."""

    obj: Poset | SimpleGraph
    names: tuple[str, ...]


def load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def _names(data: dict, key: str) -> tuple[str, ...]:
    names = data.get(key)
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise InputError(f"{key!r} must be a list of strings")
    if len(set(names)) != len(names):
        raise InputError(f"duplicate names in {key!r}")
    return tuple(names)


def _pairs(data: dict, key: str, index: dict[str, int]) -> list[tuple[int, int]]:
    pairs = data.get(key, [])
    if not isinstance(pairs, list):
        raise InputError(f"{key!r} must be a list of pairs")
    out = []
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"{key!r} entry {pair!r} is not a pair")
        for x in pair:
            if x not in index:
                raise UnknownElementError(f"unknown element {x!r} in {key!r}")
        out.append((index[pair[0]], index[pair[1]]))
    return out


def parse_poset(data: dict) -> Named:
    names = _names(data, "elements")
    index = {x: i for i, x in enumerate(names)}
    return Named(poset_from_relations(len(names), _pairs(data, "relations", index)), names)


def parse_graph(data: dict) -> Named:
    names = _names(data, "vertices")
    index = {x: i for i, x in enumerate(names)}
    return Named(SimpleGraph.from_edges(len(names), _pairs(data, "edges", index)), names)


def parse_group(data: dict, names: tuple[str, ...]) -> PermGroup:
    degree = data.get("degree")
    if not isinstance(degree, int) or degree < 0:
        raise InputError("group 'degree' must be a nonnegative integer")
    if degree != len(names):
        raise DegreeMismatchError(f"group degree {degree} does not match {len(names)} elements")
    gens = data.get("generators", [])
    if not isinstance(gens, list) or not all(isinstance(s, str) for s in gens):
        raise InputError("group 'generators' must be a list of cycle-notation strings")
    return closure([parse_cycle_notation(s, names, degree) for s in gens], degree)


def load_poset(path) -> Named:
    return parse_poset(load_json(path))


def load_graph(path) -> Named:
    return parse_graph(load_json(path))


def load_group(path, names: tuple[str, ...]) -> PermGroup:
    if path is None:
        return trivial_group(len(names))
    return parse_group(load_json(path), names)


def fmt(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def poset_to_json(P: Poset, names=None) -> dict:
    names = names or [str(i) for i in range(P.size)]
    covers = [
        (p, q)
        for p, q in sorted(P.less_than)
        if not any((p, r) in P.less_than and (r, q) in P.less_than for r in range(P.size))
    ]
    return {"elements": list(names), "relations": [[names[p], names[q]] for p, q in covers]}


def graph_to_json(graph: SimpleGraph, names=None) -> dict:
    names = names or [str(i) for i in range(graph.vertex_count)]
    return {"vertices": list(names), "edges": [[names[u], names[v]] for u, v in graph.edges]}


def group_to_json(G: PermGroup, names=None) -> dict:
    gens = G.generators or tuple(g for g in G if not g.is_identity())
    return {"degree": G.m, "generators": [g.cycle_notation(names) for g in gens]}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
