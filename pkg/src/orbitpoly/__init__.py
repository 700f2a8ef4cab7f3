"""Orbital order polynomials and orbital chromatic polynomials in exact arithmetic."""

from .counting import (
    orbit_count_oracle,
    orbital_order_polynomial,
    verify_reciprocity,
)
from .graph import SimpleGraph, orbital_chromatic_polynomial, verify_graph_reciprocity
from .permgroup import Permutation, PermGroup, closure
from .polynomial import RationalPolynomial, interpolate
from .poset import Poset, antichain, chain, order_polynomial, poset_from_relations

__all__ = [
    "Permutation",
    "PermGroup",
    "closure",
    "Poset",
    "antichain",
    "chain",
    "poset_from_relations",
    "order_polynomial",
    "RationalPolynomial",
    "interpolate",
    "orbital_order_polynomial",
    "orbit_count_oracle",
    "verify_reciprocity",
    "SimpleGraph",
    "orbital_chromatic_polynomial",
    "verify_graph_reciprocity",
]
