"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """An argument violates a documented precondition."""


class ZeroRateDivergence(InvalidInput):
    """The replacement perpetuity does not converge at a zero discount rate."""


class AgeOutOfRange(InvalidInput):
    """Age is negative or exceeds the asset's lifetime."""


class AgeOrderViolation(InvalidInput):
    """A period's end age precedes its start age."""


class NonIntegerPeriod(InvalidInput):
    """A period-table method was given a fractional age or lifetime."""


class MissingRate(InvalidInput):
    """An intrinsic schedule was requested without a discount rate."""
