"""Exception types raised by the toolkit.

Every error derives from :class:`MatroidError` so callers (and the CLI) can
catch the whole family at once.  The class name doubles as the machine
readable reason printed by the command-line front end.
"""


class MatroidError(ValueError):
    """Base class for all invalid-input conditions."""


class ElementOutOfRange(MatroidError):
    pass


class BlockTooSmall(MatroidError):
    pass


class BlockOverlap(MatroidError):
    pass


class BlockIsGroundSet(MatroidError):
    pass


class NotAnAntichain(MatroidError):
    pass


class AxiomViolation(MatroidError):
    pass


class LoopContraction(MatroidError):
    pass


class GroundSetTooLarge(MatroidError):
    pass


class RankZero(MatroidError):
    pass


class NotAHyperplane(MatroidError):
    pass


class WrongSubsetSize(MatroidError):
    pass


class RankOutOfRange(MatroidError):
    pass


class ParameterOutOfRange(MatroidError):
    pass


class DimensionMismatch(MatroidError):
    pass


class UnknownName(MatroidError):
    pass


class NotPaving(MatroidError):
    pass


class ExhaustiveTooLarge(MatroidError):
    pass
