"""Exception hierarchy shared by all orliczlab modules."""


class OrliczError(ValueError):
    """Base class for every error raised by orliczlab."""


class DomainError(OrliczError):
    """An argument lies outside the domain of the operation."""


class UnboundedConjugateError(OrliczError):
    """The supremum defining the complementary function could not be bracketed."""


class DegenerateFunctionError(OrliczError):
    """G vanishes (or is not increasing) where it must be positive."""


class EvaluationError(OrliczError):
    """A non-finite value appeared while integrating over a grid."""


class DomainMismatchError(OrliczError):
    """Two grid functions live on different grids."""


class BracketError(OrliczError):
    """Bracket expansion for a monotone root search exceeded its cap."""


class GenerationError(OrliczError):
    """A sequence member could not be generated."""


class ConfigError(OrliczError):
    """An experiment config is malformed; the message names the offending key."""
