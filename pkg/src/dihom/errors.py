class DihomError(Exception):
    pass


class Infinite(DihomError):
    """An object set that must be enumerated is not finite."""


class ShapeTooDeep(DihomError):
    pass


class DimensionMismatch(DihomError):
    pass


class NoSort(DihomError):
    """No permutation brings a tuple into staircase form."""


class NotClosed(DihomError):
    pass


class InvalidCategory(DihomError):
    pass


class NoBasepoint(DihomError):
    pass


class CompositionUnavailable(DihomError):
    pass
