"""Exception types raised by rhfactor.

Numerical failures (the computation cannot certify its own answer) derive
from :class:`NumericalFailure`; bad input derives from :class:`InputError`.
The CLI maps the two families to different exit codes.
"""


class RHError(Exception):
    pass


class InputError(RHError, ValueError):
    pass


class NumericalFailure(RHError, ArithmeticError):
    pass


class DegenerateParametrization(InputError):
    pass


class AmbiguousWinding(NumericalFailure):
    pass


class PhaseJumpTooLarge(NumericalFailure):
    pass


class NonzeroDegree(InputError):
    pass


class ZeroValue(InputError):
    pass


class BasepointOutside(InputError):
    pass


class DegenerateConstraint(InputError):
    pass


class RankAmbiguous(NumericalFailure):
    pass


class SumMismatch(NumericalFailure):
    pass


class NotSL2(InputError):
    pass


class OutsideAnnulus(InputError):
    pass


class SeriesNotConverged(NumericalFailure):
    pass


class InterfaceMismatch(InputError):
    pass
