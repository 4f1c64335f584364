"""Graph energy, leaf-aware spectral upper bounds, and seeded random-graph
experiments (Barabási–Albert trees, sparse Erdős–Rényi graphs)."""

from .graph import (
    Graph,
    DegreeProfile,
    GraphError,
    EdgeListParseError,
    degree_profile,
    make_family,
    path,
    star,
    cycle,
    complete,
    double_star,
    connected_components,
    is_tree,
    load_edge_list,
    save_edge_list,
)
from .random_graphs import ba_tree, er_graph, random_weighted_graph, derive_seed
from .spectral import (
    WeightedGraph,
    Spectrum,
    CharPoly,
    symmetric_eigenvalues,
    energy,
    energy_weighted,
    star_energy_closed_form,
    weighted_star,
    sachs_char_poly,
    char_poly_from_spectrum,
)
from .eigensolver import symmetric_eigvals, EigenSolverError
from .bounds import (
    BoundReport,
    StarDecomposition,
    AdTpComparison,
    mcclelland,
    koolen_moulton,
    aj_bound,
    ad_bound,
    tp_bound,
    tpg_bound,
    global_bound,
    global_bound_isolated,
    degree_hist_bound,
    star_decomposition,
    ad_tp_comparison,
    double_star_improvement_check,
    equality_condition_check,
    bound_report,
)
from .asymptotics import (
    SeriesValue,
    ba_nk,
    ba_nk1,
    ba_limit_constant,
    er_nk,
    er_nk1,
    er_f,
    er_f_closed_upper,
    hypoenergetic_check,
)
from .experiments import (
    ExperimentConfig,
    ResultRow,
    SoundnessError,
    run_experiment,
    rows_to_csv,
    summarize,
)

__version__ = "0.1.0"
