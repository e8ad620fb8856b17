"""Exact invariants of secant-plane varieties and ramified linear series on curves."""

__version__ = "0.1.0"

from .arith import ExactRational, binomial, factorial, generalized_binomial
from .series import (
    SeriesParams,
    SchubertIndex,
    VanishingSequence,
    rho,
    rho_ramified,
    to_vanishing,
    to_schubert,
    weight,
    eh_exists,
    eh_dimension,
    EMPTY,
)
from .secant import (
    SecantProblem,
    SecantVerdict,
    Status,
    expected_cycle_dim,
    family_dim_bound,
    secant_verdict,
    rho_zero_emptiness,
    coppens_martens_dim,
    very_ample_guaranteed,
    uf_secant_problem,
)
from .counts import SecantCount, castelnuovo, cayley_r3, consistency_check
from .chains import (
    ChainSpec,
    ChainPath,
    SecantConstruction,
    propagate_step,
    count_chain_series,
    enumerate_chain_series,
    build_secant_construction,
    gamma_dimension_identity,
    assumption_degree_checks,
)
from .ramify import (
    PowerBound,
    power_bound,
    square_bound,
    riemann_roch_ceiling,
    dn_theta_coefficient,
)
from .errors import (
    SecplanesError,
    PreconditionError,
    IntegralityError,
    StepError,
)
