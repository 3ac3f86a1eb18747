"""Exception types shared across the package."""


class ParavectorError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ParavectorError):
    """A value failed construction-time validation (non-finite, wrong shape)."""


class InvariantViolation(ParavectorError):
    """An internal algebraic invariant did not hold to tolerance."""


class SingularParavector(ParavectorError):
    """The operation needs a non-singular paravector (nonzero determinant)."""


class ImproperParavector(ParavectorError):
    """The operation needs a proper paravector (real positive determinant)."""


class OrientationMismatch(ParavectorError):
    """Two oriented quantities with different orientations were combined."""


class BadUnitVector(ParavectorError):
    """A rotation axis vector is not a usable unit 3-vector."""


class IsotropicNormal(ParavectorError):
    """A mirror/axial normal squares to zero, so the symmetry is undefined."""


class DegenerateComposition(ParavectorError):
    """Composed mirror normals give no well-defined rotation axis."""


class NotAParavectorMatrix(ParavectorError):
    """A 4x4 matrix does not match the paravector embedding pattern."""

    def __init__(self, message, entry=None):
        super().__init__(message)
        self.entry = entry


class ParseError(ParavectorError):
    """Malformed wire input."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ArityError(ParavectorError):
    """Wire input has the wrong number of components."""
