"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from orbitpoly.permgroup import Permutation
from orbitpoly.poset import poset_from_relations


@st.composite
def permutations(draw, m=None, max_m=6):
    if m is None:
        m = draw(st.integers(min_value=0, max_value=max_m))
    return Permutation(tuple(draw(st.permutations(range(m)))))


@st.composite
def posets(draw, max_size=5, min_size=0):
    size = draw(st.integers(min_value=min_size, max_value=max_size))
    order = draw(st.permutations(range(size)))
    pairs = [(order[i], order[j]) for i in range(size) for j in range(i + 1, size)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return poset_from_relations(size, [p for p, k in zip(pairs, keep) if k])

