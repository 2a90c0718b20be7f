"""siegelzeta: contour-integral evaluation of the Riemann zeta function,
the special Mordell integral, and the parabolic cylinder function U(a, z),
with cross-verification of the identities tying them together.
"""

from __future__ import annotations

from ._kernels import BACKEND as kernel_backend
from .errors import (
    DegenerateRationalPoint,
    DomainError,
    NoConvergence,
    OrderOutOfRange,
    PoleError,
    SiegelZetaError,
    SingularAtOrigin,
)
from .mordell import (
    MordellArgs,
    RationalTau,
    functional_equation_residual,
    phi_quadrature,
    phi_rational,
    transform_rhs,
)
from .numeric_core import (
    QuadratureConfig,
    QuadratureResult,
    adaptive_integrate,
    complex_gamma,
)
from .pcf import PcfArgs, pcf_recurrence_residual, pcf_u, pcf_u_batch
from .riemann_siegel import (
    METHOD_CLASSICAL,
    METHOD_PCF,
    EvalReport,
    completed_zeta,
    eta_series_oracle,
    f_lower,
    f_upper_classical,
    f_upper_pcf,
    zeta,
)
from .verification import CHECKS, run_checks

__version__ = "0.1.0"

__all__ = [
    "kernel_backend",
    "SiegelZetaError",
    "PoleError",
    "NoConvergence",
    "SingularAtOrigin",
    "OrderOutOfRange",
    "DegenerateRationalPoint",
    "DomainError",
    "QuadratureConfig",
    "QuadratureResult",
    "adaptive_integrate",
    "complex_gamma",
    "MordellArgs",
    "RationalTau",
    "phi_quadrature",
    "phi_rational",
    "transform_rhs",
    "functional_equation_residual",
    "PcfArgs",
    "pcf_u",
    "pcf_u_batch",
    "pcf_recurrence_residual",
    "METHOD_CLASSICAL",
    "METHOD_PCF",
    "EvalReport",
    "completed_zeta",
    "zeta",
    "f_upper_classical",
    "f_upper_pcf",
    "f_lower",
    "eta_series_oracle",
    "CHECKS",
    "run_checks",
    "__version__",
]
