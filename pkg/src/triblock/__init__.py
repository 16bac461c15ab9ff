"""Triangle-block graph isomorphism toolkit.

Decides isomorphism for graphs that split into vertex-disjoint triangles:
the source graph is arranged into consecutive triangle blocks, candidate
assignments of target vertices are enumerated per block, and block-by-block
products are filtered by cross-adjacency until a full relabeling witness
survives.  An independent brute-force oracle and a fuzz harness measure the
pipeline at small sizes.
"""

from .arrange import Arrangement, Block, Infeasible, block_pattern, rearrange
from .candidates import (
    CandidateSet,
    SearchTree,
    build_search_tree,
    candidate_set_for_block,
    candidate_triples,
    enumerate_candidates,
)
from .graphs import (
    Graph,
    ParseError,
    apply_permutation,
    closed_neighborhood,
    induced_subgraph,
    is_connected,
    is_regular,
    open_neighborhood,
    parse_edge_list,
    to_edge_list_text,
    vertex_in_triangle,
)
from .oracle import (
    OracleResult,
    OracleSizeError,
    brute_force_automorphisms,
    brute_force_isomorphism,
    triangle_partition_exists,
)
from .perms import (
    CapExceeded,
    GenSet,
    closure,
    compose,
    direct_product,
    from_cycles,
    identity,
    inverse,
    reduce_generators,
)
from .pipeline import (
    MODE_COMPRESSED,
    MODE_EXACT,
    CandidateCapExceeded,
    Diagnostics,
    Options,
    State,
    Verdict,
    automorphism_generators,
    consistency_filter,
    decide,
    extend,
    init_state,
    totalize,
)

__version__ = "0.1.0"
