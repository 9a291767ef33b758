"""rdrlab: rainbow domination regular graphs at desk scale.

Exact rainbow-domination solvers, parameterized graph families, the two
group-theoretic regularity criteria, RDR-preserving rewiring operations,
a small-order bicubic census, and a verification harness for the
published classification claims.
"""

from .graphs import (
    Graph,
    Bipartition,
    GirthReport,
    CanonicalForm,
    build_graph,
    bipartition,
    canonical_form,
    cycles_of_length,
    disjoint_union,
    girth,
    girth_signature,
    is_isomorphic,
    odd_closed_walk,
)
from .families import (
    FamilySpec,
    FiniteGroup,
    build_from_spec,
    cayley,
    complete_bipartite,
    cycle,
    cyclic_group,
    gp,
    htg,
    mobius,
    parse_spec,
    prism,
    s3_times_dn,
    wreath,
    xn,
)
from .rainbow import (
    GammaResult,
    RainbowAssignment,
    RdrDecision,
    RdrWitness,
    check_six_cycle_pattern,
    enumerate_rdr_colorings,
    gamma_rk,
    gamma_rk_oracle,
    is_d_rdr,
    solve_rdr,
    validate_rdf,
)
from .symmetry import (
    BlockSystem,
    PermutationGroup,
    automorphism_group,
    block_systems,
    check_krit1,
    check_krit2,
    is_vertex_transitive,
    orbits,
    quotient_graph,
    semiregular_subgroups,
    stabilizer,
)
from .constructions import (
    MetaGraphReport,
    SwitchMove,
    edge_switch,
    stitch,
    switching_reachability,
)
from .census import (
    CensusRow,
    Table2Report,
    census_row,
    classify_table2,
    generate_bicubic,
)
from .graph6 import decode_graph6, encode_graph6
from .verify import (
    TheoremReport,
    verify_basic_families,
    verify_gp,
    verify_htg,
    verify_table2,
    verify_xn,
)

__version__ = "0.1.0"
