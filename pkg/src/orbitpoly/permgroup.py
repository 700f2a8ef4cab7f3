"""Permutations of {0, ..., m-1}, finite permutation groups and the induced
actions used for orbit counting."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from .errors import ConsistencyError, InputError, UnknownElementError

T = TypeVar("T", bound=Hashable)

LabelMap = tuple[int, ...]
"""A map from the ground set into {1, ..., n}, stored as its value tuple."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0, ..., m-1}; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InputError(f"not a bijection on range({len(self.images)}): {self.images}")

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(tuple(range(m)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], m: int) -> Permutation:
        images = list(range(m))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < m:
                    raise InputError(f"cycle entry {x} outside range({m})")
                if x in seen:
                    raise InputError(f"element {x} occurs twice in cycle notation")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(tuple(images))

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * self.m
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    @cached_property
    def cycle_count(self) -> int:
        return len(cycles(self).blocks)

    @cached_property
    def sign(self) -> int:
        return sign(self)

    def cycle_notation(self, names: Sequence[str] | None = None) -> str:
        """Cycle notation with fixed points omitted; ``"()"`` for the identity."""
        name = (lambda i: names[i]) if names is not None else str
        parts = [
            "(" + " ".join(name(i) for i in block) + ")"
            for block in _cycle_lists(self)
            if len(block) > 1
        ]
        return "".join(parts) or "()"

    def __repr__(self):
        return f"Permutation({self.cycle_notation()}, m={self.m})"


def compose(g: Permutation, h: Permutation) -> Permutation:
    """The product ``gh``: first ``h``, then ``g``."""
    if g.m != h.m:
        raise InputError(f"cannot compose permutations of degrees {g.m} and {h.m}")
    return Permutation(tuple(g.images[x] for x in h.images))


def _cycle_lists(g: Permutation) -> list[list[int]]:
    seen = [False] * g.m
    out = []
    for start in range(g.m):
        if seen[start]:
            continue
        block = []
        x = start
        while not seen[x]:
            seen[x] = True
            block.append(x)
            x = g.images[x]
        out.append(block)
    return out


@dataclass(frozen=True)
class OrbitPartition:
    """Disjoint blocks covering a ground set.

    Each block is sorted and the blocks are ordered by their minimum, which is
    also the block's representative.
    """

    blocks: tuple[tuple, ...]

    @property
    def representatives(self) -> tuple:
        return tuple(b[0] for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def block_index(self) -> dict:
        return {x: i for i, b in enumerate(self.blocks) for x in b}


def cycles(g: Permutation) -> OrbitPartition:
    """Orbits of the cyclic group generated by ``g``."""
    return OrbitPartition(tuple(tuple(sorted(b)) for b in _cycle_lists(g)))


def cycle_count(g: Permutation) -> int:
    return g.cycle_count


def sign(g: Permutation) -> int:
    return -1 if (g.m + len(_cycle_lists(g))) % 2 else 1


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group stored as its sorted list of elements."""

    elements: tuple[Permutation, ...]
    m: int
    generators: tuple[Permutation, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.elements or not self.elements[0].is_identity():
            raise InputError("group elements must start with the identity")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._element_set

    @cached_property
    def _element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def is_closed(self) -> bool:
        return all(g * h in self for g in self for h in self)


def closure(generators: Iterable[Permutation], m: int) -> PermGroup:
    """Smallest group containing ``generators``, by breadth-first multiplication."""
    gens = tuple(generators)
    for g in gens:
        if g.m != m:
            raise InputError(f"generator {g} has degree {g.m}, expected {m}")
    e = Permutation.identity(m)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s * x
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return PermGroup(tuple(sorted(seen)), m, gens)


def trivial_group(m: int) -> PermGroup:
    return closure((), m)


def symmetric_group(k: int, m: int | None = None, offset: int = 0) -> PermGroup:
    """Full symmetric group on ``offset, ..., offset+k-1`` inside degree ``m``."""
    m = k + offset if m is None else m
    pts = list(range(offset, offset + k))
    gens = []
    if k >= 2:
        gens.append(Permutation.from_cycles([pts[:2]], m))
        gens.append(Permutation.from_cycles([pts], m))
    return closure(gens, m)


def cyclic_group(k: int, m: int | None = None, offset: int = 0) -> PermGroup:
    m = k + offset if m is None else m
    return closure([Permutation.from_cycles([list(range(offset, offset + k))], m)], m)


def dihedral_group(k: int) -> PermGroup:
    """Symmetries of the k-cycle on 0..k-1: rotation i -> i+1 and reflection i -> -i."""
    r = Permutation(tuple((i + 1) % k for i in range(k)))
    s = Permutation(tuple((-i) % k for i in range(k)))
    return closure([r, s], k)


def orbits(
    group: PermGroup,
    points: Iterable[T],
    act: Callable[[Permutation, T], T],
    key: Callable[[T], object] | None = None,
) -> OrbitPartition:
    """Partition ``points`` into orbits under ``act``.

    Representatives are minimal under ``key`` (natural order by default).
    Raises InputError when the identity moves a point, a point is mapped
    outside ``points``, or orbit size times stabilizer size differs from the
    group order.
    """
    pts = sorted(points, key=key)
    universe = set(pts)
    assigned: set = set()
    blocks = []
    e = group.identity
    for x in pts:
        if x in assigned:
            continue
        if act(e, x) != x:
            raise InputError(f"identity does not fix {x!r}")
        images = [act(g, x) for g in group]
        orbit = set(images)
        stab = sum(1 for y in images if y == x)
        if not orbit <= universe:
            raise InputError(f"action maps {x!r} outside the point set")
        if len(orbit) * stab != group.order:
            raise InputError(
                f"orbit-stabilizer fails at {x!r}: {len(orbit)} * {stab} != {group.order}"
            )
        assigned |= orbit
        blocks.append(tuple(sorted(orbit, key=key)))
    return OrbitPartition(tuple(blocks))


def act_on_map(g: Permutation, f: Sequence[int]) -> LabelMap:
    """Induced left action ``(g.f)(x) = f(g^{-1} x)``."""
    # (g.f)[g(y)] = f[y]
    out = [0] * len(f)
    for y, gy in enumerate(g.images):
        out[gy] = f[y]
    return tuple(out)


def stabilizer(group: PermGroup, f: Sequence[int]) -> PermGroup:
    f = tuple(f)
    fixing = tuple(g for g in group if act_on_map(g, f) == f)
    return PermGroup(fixing, group.m)


def burnside_count(group: PermGroup, fix_counter: Callable[[Permutation], int]) -> int:
    """Number of orbits as the group average of fixpoint counts.

    The average is computed exactly; a fractional result means ``fix_counter``
    does not come from an action of ``group``.
    """
    avg = Fraction(sum(fix_counter(g) for g in group), group.order)
    if avg.denominator != 1:
        raise ConsistencyError(f"Burnside average {avg} is not an integer")
    return int(avg)


def canonical_form(group: PermGroup, f: Sequence[int]) -> LabelMap:
    """Lexicographically least map in the orbit of ``f``."""
    return min(act_on_map(g, f) for g in group)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycle_notation(text: str, names: Sequence[str] | None, m: int) -> Permutation:
    """Parse ``"(a b)(c d e)"``. Entries are looked up in ``names`` when given,
    otherwise read as integer indices. ``"()"`` or ``""`` is the identity."""
    stripped = _CYCLE_RE.sub("", text).strip()
    if stripped:
        raise InputError(f"cannot parse cycle notation {text!r}")
    index = {name: i for i, name in enumerate(names)} if names is not None else None
    cyc_list = []
    for body in _CYCLE_RE.findall(text):
        tokens = body.replace(",", " ").split()
        cyc = []
        for tok in tokens:
            if index is not None:
                if tok not in index:
                    raise UnknownElementError(f"unknown element {tok!r} in {text!r}")
                cyc.append(index[tok])
            else:
                try:
                    cyc.append(int(tok))
                except ValueError:
                    raise UnknownElementError(f"non-integer element {tok!r} in {text!r}") from None
        if cyc:
            cyc_list.append(cyc)
    return Permutation.from_cycles(cyc_list, m)
