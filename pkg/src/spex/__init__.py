"""Spectral extremal problems for K_{s,t}-minor-free graphs: constructions,
minor tests, certified spectral radii and exhaustive small-graph search."""

from __future__ import annotations

from .canonical import are_isomorphic, canonical_code
from .enumeration import count_graphs, enumerate_graphs
from .errors import CapacityError, DomainError, ParseError, PrecisionError, SpexError, ValidationError
from .families import FamilySpec, build_family, family_metadata
from .graph6 import decode_g6, encode_g6
from .graphs import Graph, complement, disjoint_union, join
from .minors import Biclique, BranchModel, ExplicitGraph, Star, find_minor, has_minor, has_st_property
from .search import SearchSpec, search_extremal
from .spectral import char_poly, compare_rho, rho, rho_enclosure, rho_exact

__version__ = "0.1.0"

__all__ = [
    "Biclique",
    "BranchModel",
    "CapacityError",
    "DomainError",
    "ExplicitGraph",
    "FamilySpec",
    "Graph",
    "ParseError",
    "PrecisionError",
    "SearchSpec",
    "SpexError",
    "Star",
    "ValidationError",
    "are_isomorphic",
    "build_family",
    "canonical_code",
    "char_poly",
    "compare_rho",
    "complement",
    "count_graphs",
    "decode_g6",
    "disjoint_union",
    "encode_g6",
    "enumerate_graphs",
    "family_metadata",
    "find_minor",
    "has_minor",
    "has_st_property",
    "join",
    "rho",
    "rho_enclosure",
    "rho_exact",
    "search_extremal",
]
