"""Exception types shared across the library."""


class SiegelZetaError(Exception):
    """Base class for all library errors."""


class PoleError(SiegelZetaError):
    """Evaluation requested too close to a pole of the gamma function."""


class NoConvergence(SiegelZetaError):
    """Refinement budget exhausted before the tolerance was met.

    The partial result, when available, is attached as ``result``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class SingularAtOrigin(SiegelZetaError):
    """Ray integrand grows too fast at the origin to be integrable."""


class OrderOutOfRange(SiegelZetaError):
    """Parabolic cylinder order outside the supported continuation range."""


class DegenerateRationalPoint(SiegelZetaError):
    """Closed-form denominator vanishes (removable singularity of the
    rational-tau formula); callers should fall back to quadrature."""


class DomainError(SiegelZetaError):
    """Argument outside the documented accuracy domain."""
