"""DeGroot-Friedkin social-power dynamics read as entropic mirror descent."""

from .descent_engines import (
    GridSample,
    dual_bregman_check,
    entropic_md_step,
    grid_minimize_oracle,
    m_project_simplex,
    md_solve,
    natural_gradient_step,
    objective_grid,
    proximal_step,
)
from .df_dynamics import Trajectory, advance, c_from_xstar, df_map, iterate, solve_fixed_point
from .influence_net import (
    CentralityVector,
    InteractionMatrix,
    TopologyReport,
    is_irreducible,
    perron_left_eigenvector,
    star_topology,
    validate_interaction_matrix,
)
from .simplex_core import (
    HALF_SQUARED_NORM,
    NEGATIVE_ENTROPY,
    MirrorMap,
    bregman_divergence,
    dual_to_primal,
    entropy,
    extropy,
    generalized_kl,
    kl_divergence,
    kl_project_simplex,
    mirror_to_dual,
)
from .variational import (
    DualScanResult,
    KktReport,
    ObjectiveReport,
    dual_function,
    dual_scan,
    h_star,
    kkt_report,
    objective,
    rho,
    subgradient,
)

__version__ = "0.1.0"
