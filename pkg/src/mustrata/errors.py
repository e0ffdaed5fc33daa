"""Exception types raised on domain violations.

Every class derives from :class:`MustrataError` so that the CLI can map any
domain failure to exit status 1.  Internal consistency failures (an
implementation bug, not bad input) are raised as ``AssertionError``.
"""


class MustrataError(ValueError):
    pass


class FieldMismatchError(MustrataError):
    pass


class DegreeMismatchError(MustrataError):
    pass


class LinearDependenceError(MustrataError):
    pass


class NotCoprimeError(MustrataError):
    pass


class PartitionError(MustrataError):
    pass


class HilbertShapeError(MustrataError):
    pass


class RetryBudgetExceeded(MustrataError):
    pass


class SamplingError(MustrataError):
    pass
