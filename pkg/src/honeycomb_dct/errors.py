"""Exception hierarchy shared by the library and the command line."""


class HoneycombError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HoneycombError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class DimensionMismatch(HoneycombError, ValueError):
    """Sample or spectrum vectors do not fit the family or each other."""


class UnknownWeight(HoneycombError, KeyError):
    """A weight is not part of the family's weight set."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown weight"


class AdmissibilityError(HoneycombError, ValueError):
    """Extension coefficients violate the positivity or intertwining condition."""

    def __init__(self, weight, condition, value):
        self.weight = weight
        self.condition = condition
        self.value = value
        super().__init__(f"weight {weight.triple}: condition '{condition}' fails (value {value!r})")
