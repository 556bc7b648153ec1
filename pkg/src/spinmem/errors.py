"""Exceptions and warnings raised by spinmem."""


class SpinmemError(Exception):
    pass


class NonPositiveParameter(SpinmemError, ValueError):
    pass


class MissingCavityTransmission(SpinmemError, ValueError):
    pass


class MissingDetuning(SpinmemError, ValueError):
    pass


class NoWindowError(SpinmemError):
    pass


class QuadratureFailure(SpinmemError, RuntimeError):
    pass


class NoBracket(SpinmemError, ValueError):
    pass


class SumRuleViolation(SpinmemError):
    pass


class UnknownFigure(SpinmemError, KeyError):
    pass


class BoundsError(SpinmemError, ValueError):
    pass


class RegimeWarning(UserWarning):
    """A parameter set sits outside the regime where an approximation holds."""


class GainRegimeWarning(RegimeWarning):
    pass


class ConvergenceWarning(UserWarning):
    pass
