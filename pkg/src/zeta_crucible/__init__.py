"""Cross-checked numerical evaluation of zeta(n): series, Bernoulli closed
form, single improper integrals, hyperbolic-substitution integrals and
quasi-Monte Carlo cube integrals."""

from .bernoulli import BernoulliTable, bernoulli_table, zeta_even_closed_form
from .cube import IntegrandKind, QmcEstimate, invariance_check, qmc_cube, zeta_from_cube
from .hyperbolic import (
    BoxSpec, CubeCoords, HyperCoords, forward_map, gamma_region_contains,
    inverse_map_n3, jacobian_det_closed_form, jacobian_matrix,
)
from .pipeline import (
    PipelineStep, feynman_F, feynman_f, i2_two_piece, lemma3_overestimate,
    log_coth_power_integral, run_section3_pipeline, x_over_sinh_integral, zeta_n_corollary,
)
from .quadrature import EndpointSpec, QuadResult, integrate_finite, integrate_semi_infinite
from .report import ReportEntry, VerificationReport
from .series import SeriesResult, lambda_series, lemma4_exact, zeta_from_lambda, zeta_series
from .suites import SuiteConfig, run_suite, zeta_command

__version__ = "0.1.0"
