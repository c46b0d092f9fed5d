"""Graph energy toolkit for bounded-degree C4-free graphs and trees:
adjacency spectra from an in-repo symmetric eigensolver, closed-form
bounds, isomorph-free enumeration, and exhaustive verification sweeps."""

from .bounds import (
    AlphaResult,
    TheoremVerdict,
    alpha,
    alpha_bounds,
    bipartite_energy_lower_bound,
    degree_square_bound,
    edge_threshold_met,
    large_radius_polynomial,
    rti_energy_lower_bound,
    theorem1_verdict,
)
from .constructions import (
    FamilySpec,
    b_tree,
    balanced_binary_tree,
    complete_bipartite,
    cycle,
    exceptional_trees,
    path,
    star,
)
from .enumeration import (
    EnumConfig,
    TreeCode,
    connected_c4free_graphs,
    count_trees,
    free_tree_sequences,
    level_sequence_to_graph,
    trees_bounded_degree,
)
from .graphs import (
    Graph,
    canonical_code,
    count_c4,
    has_isolated_vertex,
    is_bipartite,
    is_connected,
    is_tree,
    parse_graph6,
    write_graph6,
)
from .spectra import (
    EnergyReport,
    Spectrum,
    energy,
    exact_moments,
    hofmeister_check,
    moment,
    spectrum,
    verify_moment_identities,
)
from .sweeps import (
    ConjectureRow,
    OrderStat,
    RunConfig,
    VerifyOutcome,
    conjecture_table,
    fact1_sweep,
    theorem1_sweep,
    theorem2_sweep,
    theorem3_sweep,
)

__version__ = "0.1.0"
