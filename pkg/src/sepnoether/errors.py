class SepNoetherError(Exception):
    pass


class ParseError(SepNoetherError, ValueError):
    """Malformed group, element or vector text."""


class GroupMismatch(SepNoetherError, ValueError):
    """Elements from different group presentations were combined."""


class NotZeroSum(SepNoetherError, ValueError):
    """A multiplicity vector does not sum to the identity."""


class BudgetExceeded(SepNoetherError):
    """An enumeration would exceed its configured candidate cap."""


class NotApplicable(SepNoetherError):
    """The hypotheses of a check are not met by the given input."""
