"""Exact inf-convolution over finite metric magmas, sequence monoids and convex functions on the line."""
from .convexcone import (
    PLKatetovFn,
    banach_on_kuratowski,
    epi_scale,
    fixed_point_solve,
    gamma,
    pl_dinf,
    pl_infconv,
    verify_cone_axioms,
    verify_cone_iso,
)
from .core import AttainmentReport, Fond0Report, attainment, inf_conv, n_fold_conv, verify_fond0
from .errors import HypothesisUnmet, InfconvError, InvariantViolation, ParseError
from .fnspace import (
    FnOnX,
    d_inf,
    is_katetov,
    is_lip1,
    is_positive,
    kuratowski,
    perturb_to_strong_min,
    rho,
    rho_tilde,
    strong_min,
)
from .katetov import (
    SubspaceFn,
    contraction_isometry_check,
    eval_as_distance,
    katetov_closure_check,
    katetov_extension,
    katetov_units,
)
from .kernels import bench_minplus, convex_minplus_merge, naive_minplus, smawk_minplus
from .magma import (
    FiberSet,
    FiniteMetricMagma,
    MagmaClass,
    check_metric_invariance,
    classify_magma,
    cyclic_group,
    d_invariance_at,
    delta_fiber,
    dihedral_group,
    discrete_metric,
    subtraction_quasigroup,
)
from .monoid import (
    MorphismReport,
    UnitCertificate,
    argmin_morphism,
    cancellation_search,
    canonical_iso,
    factorization_witness,
    is_unit,
    kuratowski_closure,
    verify_int2,
)
from .rational import INF
from .report import TheoremReport
from .zline import CofiniteSeq, CyclicSeq, cyclic_minplus, z_minplus

__version__ = "0.1.0"
