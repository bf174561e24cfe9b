"""Exception hierarchy for the package."""


class ExtFormError(Exception):
    """Base class for every library error."""


class IdentifierError(ExtFormError, KeyError):
    pass


class ScaleError(ExtFormError):
    """An enumeration would exceed the configured limits."""


class GuaranteeOrderError(ExtFormError):
    pass


class GuaranteeInfeasibleError(ExtFormError):
    pass


class ShapeError(ExtFormError, ValueError):
    pass


class NotPsdError(ExtFormError):
    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which


class NotNonnegativeError(ExtFormError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EmptyPolyhedronError(ExtFormError):
    pass


class FormulationInvalidError(ExtFormError):
    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class FactorizationInvalidError(ExtFormError):
    pass


class ReductionError(ExtFormError):
    pass


class SimpleReductionInvalidError(ReductionError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalConsistencyError(ExtFormError):
    pass


class RationalParseError(ExtFormError, ValueError):
    pass
