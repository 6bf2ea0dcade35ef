"""Renormalized cubic non-Gaussian integrals and the machinery behind them.

The closed form C_plus / D**(1/6) (D > 0) or C_minus / (-D)**(1/6) (D < 0)
for the integral of ((a*x^3 + b*x^2 + c*x + d)^2)**(-1/3) over the real line,
with exact discriminant/resultant computations, the Gamma/Beta kernel behind
the constants, renormalized expectation values, and an independent tanh-sinh
quadrature oracle.
"""

from .discriminant import (
    DiscriminantResult,
    ResolventData,
    Sign,
    SylvesterMatrix,
    discriminant_cubic_explicit,
    discriminant_general,
    discriminant_quartic_explicit,
    discriminant_quintic_explicit,
    key_lemma_check,
    resolvent_data,
    resultant,
    sylvester_matrix,
    vandermonde_delta_sq,
)
from .errors import (
    DegenerateLeadingCoefficient,
    DegreeTooLow,
    DivergentIntegral,
    DomainError,
    IllConditionedWarning,
    NoConvergence,
    NonGaussError,
    NotARoot,
    RepeatedRootDivergence,
    SingularPoint,
    StencilCrossesSingularity,
)
from .polynomial import (
    CubicCoeffs,
    CubicFactorization,
    Polynomial,
    RootClassification,
    RootSet,
    cubic_roots,
    factor_out_root,
    parse_number,
)
from .quadrature import (
    Panel,
    PanelDecomposition,
    QuadratureConfig,
    decompose,
    gaussian_integral_numeric,
    integral_numeric,
    integral_numeric_general,
    integrand,
)
from .renorm import (
    ExpectationSet,
    IntegralMethod,
    IntegralResult,
    closed_form_integral,
    expectations,
    expectations_fd_check,
    gaussian_analogue,
    log_closed_form,
    pde_identity_residuals,
)
from .special import (
    BetaConstants,
    IdentityResidual,
    beta,
    constants,
    gamma,
    identity_suite,
    ln_gamma,
)

__all__ = [
    "BetaConstants",
    "CubicCoeffs",
    "CubicFactorization",
    "DegenerateLeadingCoefficient",
    "DegreeTooLow",
    "DiscriminantResult",
    "DivergentIntegral",
    "DomainError",
    "ExpectationSet",
    "IdentityResidual",
    "IllConditionedWarning",
    "IntegralMethod",
    "IntegralResult",
    "NoConvergence",
    "NonGaussError",
    "NotARoot",
    "Panel",
    "PanelDecomposition",
    "Polynomial",
    "QuadratureConfig",
    "RepeatedRootDivergence",
    "ResolventData",
    "RootClassification",
    "RootSet",
    "Sign",
    "SingularPoint",
    "StencilCrossesSingularity",
    "SylvesterMatrix",
    "beta",
    "closed_form_integral",
    "constants",
    "cubic_roots",
    "decompose",
    "discriminant_cubic_explicit",
    "discriminant_general",
    "discriminant_quartic_explicit",
    "discriminant_quintic_explicit",
    "expectations",
    "expectations_fd_check",
    "factor_out_root",
    "gamma",
    "gaussian_analogue",
    "gaussian_integral_numeric",
    "identity_suite",
    "integral_numeric",
    "integral_numeric_general",
    "integrand",
    "key_lemma_check",
    "ln_gamma",
    "log_closed_form",
    "parse_number",
    "pde_identity_residuals",
    "resolvent_data",
    "resultant",
    "sylvester_matrix",
    "vandermonde_delta_sq",
]

__version__ = "0.1.0"
