"""Serre's condition S_r and sequential S_r for simplicial complexes and graphs."""

from .complex import (
    RelativePair,
    SimplicialComplex,
    alexander_dual,
    cone,
    face,
    is_connected,
    is_pure,
    is_shellable,
    is_vertex_decomposable,
    join,
    link,
    minimal_nonfaces,
    parse_complex,
    pure_skeleton,
    skeleton,
)
from .config import Limits, limits
from .errors import DegenerateComplexError, InputError, ParseError, ResourceError, SeqSrError
from .graphs import (
    Graph,
    bipartite_battery,
    chordless_cycles,
    cycle_graph,
    independence_complex,
    parse_graph,
    thm_conditions,
    whiskered_even_cycles,
)
from .homology import HomologyVector, reduced_homology, relative_homology
from .linalg import GF, QQ, Field
from .reports import CheckReport
from .resolution import (
    BettiTable,
    SquarefreeIdeal,
    betti_face_ring,
    betti_ideal,
    degree_component,
    is_cw_linear_first_r,
    is_linear_first_r,
    koszul_betti,
    sr_ideal,
)
from .serre import (
    is_CM,
    is_relative_Sr,
    is_seq_CM,
    is_seq_S2_local,
    is_seq_Sr_relative,
    is_seq_Sr_skeleton,
    is_Sr,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "CheckReport",
    "DegenerateComplexError",
    "Field",
    "GF",
    "Graph",
    "HomologyVector",
    "InputError",
    "Limits",
    "ParseError",
    "QQ",
    "RelativePair",
    "ResourceError",
    "SeqSrError",
    "SimplicialComplex",
    "SquarefreeIdeal",
    "alexander_dual",
    "betti_face_ring",
    "betti_ideal",
    "bipartite_battery",
    "chordless_cycles",
    "cone",
    "cycle_graph",
    "degree_component",
    "face",
    "independence_complex",
    "is_CM",
    "is_Sr",
    "is_connected",
    "is_cw_linear_first_r",
    "is_linear_first_r",
    "is_pure",
    "is_relative_Sr",
    "is_seq_CM",
    "is_seq_S2_local",
    "is_seq_Sr_relative",
    "is_seq_Sr_skeleton",
    "is_shellable",
    "is_vertex_decomposable",
    "join",
    "koszul_betti",
    "limits",
    "link",
    "minimal_nonfaces",
    "parse_complex",
    "parse_graph",
    "pure_skeleton",
    "reduced_homology",
    "relative_homology",
    "skeleton",
    "sr_ideal",
    "thm_conditions",
    "whiskered_even_cycles",
]
