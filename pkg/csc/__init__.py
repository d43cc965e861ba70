# Metadados do pacote
__title__ = "csc"
__version__ = "0.1.0"
__license__ = "MIT"
__description__ = (
    "Máquina CSC: configurações centralmente simétricas A± de matrizes inteiras "
    "e de grafos, ideais tóricos, normalidade, séries de Hilbert e politopos Gorenstein Fano."
)

# Exportações públicas
from .errors import (
    CscError,
    InvalidInput,
    ParseError,
    RankDeficient,
    PreconditionViolated,
    NotBipartite,
    ApexNotUniversalForOddCycles,
    NotDecomposable,
    ResourceLimit,
    SizeLimit,
)

from .config import get_config, set_config, load_config, setup_logging

from .intlin import (
    IntMatrix,
    INFINITE,
    hnf,
    hnf_solve,
    in_column_lattice,
    matrix_rank,
    bareiss_det,
    gcd_maximal_minors,
    lattice_index,
    is_unimodular,
    lattice_normalize,
)

from .configs import (
    Configuration,
    CscMatrix,
    is_configuration,
    as_configuration,
    central_symmetrize,
    graph_config_rho,
    graph_config_mu,
    delete_redundant_row,
    nonunimodularity_witness,
)

from .graphs import (
    Graph,
    is_connected,
    is_bipartite,
    find_disjoint_odd_cycles,
    disjoint_odd_cycles_bridged,
    is_chordal_bipartite,
    satisfies_star_condition,
    find_odd_cycle_apex,
    split_apex,
    graph_from_family,
)

from .toric import (
    Binomial,
    TermOrder,
    GroebnerBasis,
    kernel_lattice,
    buchberger,
    toric_ideal_gb,
    initial_ideal,
    is_squarefree,
    verify_reduced_gb,
    ideals_equal,
    minimal_generator_degrees,
    is_quadratically_generated,
    bipartite_gb,
)

from .polytope import (
    build_polytope,
    csc_polytope,
    affine_dim,
    facets,
    interior_contains,
    standard_form,
    dual_polytope,
    polytope_vertices,
    fano_verdict,
    is_gorenstein_fano,
    pulling_triangulation,
    normalized_volume,
)

from .semigroup import (
    degree_slices,
    hilbert_h_vector,
    normality_check,
    decompose,
    odd_cycle_witness,
    gorenstein_consistent,
)

__all__ = [
    # errors
    "CscError",
    "InvalidInput",
    "ParseError",
    "RankDeficient",
    "PreconditionViolated",
    "NotBipartite",
    "ApexNotUniversalForOddCycles",
    "NotDecomposable",
    "ResourceLimit",
    "SizeLimit",
    # config
    "get_config",
    "set_config",
    "load_config",
    "setup_logging",
    # intlin
    "IntMatrix",
    "INFINITE",
    "hnf",
    "hnf_solve",
    "in_column_lattice",
    "matrix_rank",
    "bareiss_det",
    "gcd_maximal_minors",
    "lattice_index",
    "is_unimodular",
    "lattice_normalize",
    # configs
    "Configuration",
    "CscMatrix",
    "is_configuration",
    "as_configuration",
    "central_symmetrize",
    "graph_config_rho",
    "graph_config_mu",
    "delete_redundant_row",
    "nonunimodularity_witness",
    # graphs
    "Graph",
    "is_connected",
    "is_bipartite",
    "find_disjoint_odd_cycles",
    "disjoint_odd_cycles_bridged",
    "is_chordal_bipartite",
    "satisfies_star_condition",
    "find_odd_cycle_apex",
    "split_apex",
    "graph_from_family",
    # toric
    "Binomial",
    "TermOrder",
    "GroebnerBasis",
    "kernel_lattice",
    "buchberger",
    "toric_ideal_gb",
    "initial_ideal",
    "is_squarefree",
    "verify_reduced_gb",
    "ideals_equal",
    "minimal_generator_degrees",
    "is_quadratically_generated",
    "bipartite_gb",
    # polytope
    "build_polytope",
    "csc_polytope",
    "affine_dim",
    "facets",
    "interior_contains",
    "standard_form",
    "dual_polytope",
    "polytope_vertices",
    "fano_verdict",
    "is_gorenstein_fano",
    "pulling_triangulation",
    "normalized_volume",
    # semigroup
    "degree_slices",
    "hilbert_h_vector",
    "normality_check",
    "decompose",
    "odd_cycle_witness",
    "gorenstein_consistent",
]
