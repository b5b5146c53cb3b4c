"""Exception hierarchy."""


class WRicciError(Exception):
    pass


class NotPositiveDefinite(WRicciError, ValueError):
    pass


class NotHermitian(WRicciError, ValueError):
    pass


class ChartDomainViolation(WRicciError, ValueError):
    pass


class StencilFailure(WRicciError, ValueError):
    pass


class ProfileInvalid(WRicciError, ValueError):
    pass


class QuadratureFailure(WRicciError, RuntimeError):
    pass


class ZeroVector(WRicciError, ValueError):
    pass


class NonRealResult(WRicciError, ValueError):
    pass


class SubspaceNotOrthonormal(WRicciError, ValueError):
    pass


class OptimizationDivergence(WRicciError, RuntimeError):
    pass


class InvalidP(WRicciError, ValueError):
    pass


class InvalidRegime(WRicciError, ValueError):
    pass


class NotEinstein(WRicciError, ValueError):
    pass


class DimensionMismatch(WRicciError, ValueError):
    pass


class ConfigError(WRicciError, ValueError):
    pass
