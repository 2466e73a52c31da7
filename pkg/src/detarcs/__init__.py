"""Arc-space invariants of generic determinantal varieties, in exact arithmetic."""
from .partitions import (
    INF,
    PrePartition,
    SingleRemoval,
    InfiniteRemoval,
    Slip,
    Fall,
    MoveError,
    conjugate,
    dominates,
    codominates,
    duality_check,
    apply_move,
    covers_via_moves,
    enumerate_partitions,
    enumerate_prepartitions,
    truncate,
    parse_prepartition,
)
from .orbits import (
    MatrixShape,
    Orbit,
    ContactSpec,
    orbit_in_determinantal,
    orbit_in_contact_locus,
    orbit_closure_contains,
    minimal_contact_orbits,
    count_contact_components,
    count_jet_components,
    truncate_orbit,
)
from .invariants import (
    orbit_codimension,
    stabilizer_codimension,
    log_discrepancy,
    lct,
    lct_vertex_values,
    lct_bruteforce,
)
from .grothendieck import (
    LaurentPoly,
    class_gl,
    class_grassmannian,
    parabolic_data,
    class_flag_quotient,
    class_levi,
    orbit_volume,
    jet_orbit_class,
    expand_at_one,
)
from .zeta import (
    psi_exponents,
    eta_class,
    motivic_zeta_terms,
    evaluate_motivic_zeta,
    series_zeta_oracle,
    topological_zeta,
    zeta_poles,
    specialize_to_topological,
)

__version__ = "0.1.0"
