"""Exception hierarchy shared by all modules."""


class UntwistError(Exception):
    """Base class for every error raised by this package."""


class DomainError(UntwistError, ValueError):
    """An argument lies outside the domain of the operation (k = 0, x = 0, ...)."""


class NormalizationError(UntwistError, ValueError):
    pass


class NotDivisibleError(UntwistError, ArithmeticError):
    """Raised by exact division when some coefficient is not divisible.

    ``exponent`` and ``coefficient`` identify the lowest-degree offending term.
    """

    def __init__(self, exponent, coefficient, divisor):
        self.exponent = exponent
        self.coefficient = coefficient
        self.divisor = divisor
        super().__init__(
            f"coefficient {coefficient} of t^{exponent} is not divisible by {divisor}"
        )


class DimensionError(UntwistError, ValueError):
    pass


class CapacityError(UntwistError, ValueError):
    """Input exceeds a documented size bound."""


class SingularMatrixError(UntwistError, ArithmeticError):
    pass


class InfiniteCokernelError(SingularMatrixError):
    pass


class DegeneracyError(UntwistError, ValueError):
    pass


class SeifertValidationError(UntwistError, ValueError):
    def __init__(self, invariant, message):
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


class ContractError(UntwistError, RuntimeError):
    """An internal identity that must hold for valid inputs was violated."""


class CatalogError(UntwistError, ValueError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")
