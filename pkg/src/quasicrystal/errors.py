class QuasiCrystalError(Exception):
    """Base class for every error raised by this package."""


class RankError(QuasiCrystalError, ValueError):
    """A letter exceeds the rank of the alphabet in use."""


class ShapeError(QuasiCrystalError, ValueError):
    """A filling, composition or partition has the wrong shape."""


class StructureError(QuasiCrystalError):
    """A built graph does not have the structure it must have."""


class ParameterError(QuasiCrystalError, ValueError):
    pass


class TheoremViolation(QuasiCrystalError):
    """A construction that a theorem guarantees has failed its own validation."""
