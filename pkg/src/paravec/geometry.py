"""Parallelism, perpendicularity, and paravector angles.

Two non-singular paravectors are parallel when their vector product
vanishes (equivalently, one is a complex multiple of the other) and
perpendicular when their scalar product vanishes.  Spatial parallelism
only asks the vector parts to be collinear; singular parallelism asks
the whole integrated product to vanish and can only hold between
singular paravectors.

An angle between two proper paravectors is the integrated product
divided by both modules; it always has determinant one.  Its scalar
component is named ``cosinis`` and the vector component ``sinis``
(left orientation) or ``dextis`` (right orientation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    DEFAULT_TOL,
    ONE,
    Paravector,
    component_norm,
    component_scale,
    vcross,
)
from .errors import (
    ImproperParavector,
    InvariantViolation,
    OrientationMismatch,
    SingularParavector,
)
from .products import Orientation, integrated, scalar_product, vector_product


@dataclass(frozen=True, slots=True)
class Angle:
    """A determinant-one paravector with an orientation tag."""

    value: Paravector
    orientation: Orientation

    def __post_init__(self):
        d = self.value.det()
        sc = component_scale(self.value)
        if abs(d - 1.0) > 1e-6 * max(1.0, sc * sc):
            raise InvariantViolation("an angle paravector must have determinant one")

    @property
    def cosinis(self):
        return self.value.s

    @property
    def sinis(self):
        """Vector component under its left-orientation name."""
        return self.value.v

    @property
    def dextis(self):
        """Vector component under its right-orientation name."""
        return self.value.v

    @classmethod
    def identity(cls, orientation=Orientation.RIGHT):
        return cls(ONE, orientation)


def _require_nonsingular(p, tol):
    if abs(p.det()) <= tol.quadratic(component_scale(p)):
        raise SingularParavector("operation requires non-singular paravectors")


def _vec_norm(v):
    return math.sqrt(abs(v[0]) ** 2 + abs(v[1]) ** 2 + abs(v[2]) ** 2)


def is_parallel(a, b, tol=DEFAULT_TOL):
    """True when the vector product of two non-singular paravectors vanishes."""
    _require_nonsingular(a, tol)
    _require_nonsingular(b, tol)
    w = vector_product(a, b, Orientation.RIGHT)
    return _vec_norm(w) <= tol.abs + tol.rel * component_norm(a) * component_norm(b)


def is_perpendicular(a, b, tol=DEFAULT_TOL):
    """True when the scalar product of two non-singular paravectors vanishes."""
    _require_nonsingular(a, tol)
    _require_nonsingular(b, tol)
    return abs(scalar_product(a, b)) <= tol.abs + tol.rel * component_norm(
        a
    ) * component_norm(b)


def is_spatially_parallel(a, b, tol=DEFAULT_TOL):
    """True when the cross product of the vector parts vanishes."""
    c = vcross(a.v, b.v)
    return _vec_norm(c) <= tol.abs + tol.rel * _vec_norm(a.v) * _vec_norm(b.v)


def is_singularly_parallel(a, b, tol=DEFAULT_TOL):
    """True when the whole right integrated product vanishes.

    A true verdict forces both operands to be singular.
    """
    p = integrated(a, b, Orientation.RIGHT).value
    thr = tol.abs + tol.rel * component_norm(a) * component_norm(b)
    return (
        abs(p.s) <= thr
        and abs(p.v[0]) <= thr
        and abs(p.v[1]) <= thr
        and abs(p.v[2]) <= thr
    )


def parallel_ratio(a, b):
    """The complex lambda with ``a = lambda * b`` when a and b are parallel.

    Uses the largest-magnitude component of b as pivot to avoid dividing
    by a near-zero entry.  The result is only meaningful when the operands
    really are parallel; callers verify by substitution.
    """
    comps_b = (b.s,) + b.v
    comps_a = (a.s,) + a.v
    k = max(range(4), key=lambda i: abs(comps_b[i]))
    if comps_b[k] == 0:
        raise SingularParavector("cannot solve a scale against the zero paravector")
    return comps_a[k] / comps_b[k]


def _proper_module(p, tol):
    d = p.det()
    thr = tol.quadratic(component_scale(p))
    if abs(d.imag) > thr or d.real <= thr:
        raise ImproperParavector("angles are defined between proper paravectors only")
    return math.sqrt(d.real)


def angle(a, b, orientation=Orientation.RIGHT, tol=DEFAULT_TOL):
    """Oriented angle between two proper paravectors.

    The integrated product divided by both modules; the result has
    determinant one.
    """
    ma = _proper_module(a, tol)
    mb = _proper_module(b, tol)
    value = integrated(a, b, orientation).value * (1.0 / (ma * mb))
    return Angle(value, orientation)


def compose_angles(first, second):
    """Product of two same-oriented angles, itself an angle."""
    if first.orientation is not second.orientation:
        raise OrientationMismatch("cannot compose a left angle with a right angle")
    return Angle(first.value * second.value, first.orientation)


def explement(a):
    """Angle with the reversed value: same cosinis, negated vector component.

    Equals the angle taken with swapped arguments.
    """
    return Angle(a.value.rev(), a.orientation)
