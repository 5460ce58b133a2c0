"""Automorphism groups of graphs, centred on Cayley graphs of S_n
generated by transpositions."""

from .autsearch import AutResult, automorphism_group, is_vertex_transitive, vertex_stabilizer
from .cayley import CayleyGraph, build_cayley
from .graphcore import (
    SimpleGraph,
    build_named,
    complement,
    count_cliques,
    disjoint_copies,
    girth_data,
    is_isomorphic,
    line_graph,
)
from .perm import Perm, compose, cycle_count, cycle_decomposition, identity, inverse, parse_perm
from .permgroup import PermGroup, direct_sum, is_normal, symmetric_group, wreath
from .theoremlab import (
    aut_group_fixing_S,
    check_normal,
    feng_condition,
    four_cycle_census,
    predict_aut,
    six_cycle_census,
    verify_prediction,
)
from .transposition import TranspositionSet, recognize_family, transposition_graph

__version__ = "0.1.0"
