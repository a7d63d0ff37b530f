"""Exception types raised across the package."""


class SymbpowError(Exception):
    """Base class for every error raised by symbpow."""


class InputError(SymbpowError, ValueError):
    """Malformed or out-of-contract input."""


class EmptyFaceList(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class EmptyFacet(InputError):
    pass


class FullFacet(InputError):
    pass


class SkeletonOutOfRange(InputError):
    pass


class LengthMismatch(InputError):
    pass


class EmptyPrimeSupport(InputError):
    pass


class EmptyPrimeList(InputError):
    pass


class ZeroIdeal(InputError):
    pass


class UnitIdeal(InputError):
    pass


class DegreeOutOfLattice(InputError):
    pass


class NotDownwardClosed(InputError):
    pass


class NotACover(InputError):
    pass


class NotBasic(InputError):
    pass


class NotMatroid(InputError):
    pass


class NotPure(InputError):
    pass


class NoViolation(InputError):
    pass


class TupleMismatch(InputError):
    pass


class LemmaRangeViolated(InputError):
    pass


class WindowTooSmall(InputError):
    pass


class CapacityExceeded(SymbpowError, RuntimeError):
    """An intermediate result grew past its configured cap."""


class BudgetExceeded(SymbpowError, RuntimeError):
    """A corpus run overran its wall-clock budget."""
