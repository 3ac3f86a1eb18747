"""Similarity, rotations, mirror and axial symmetry, and orthogonality checks.

A rotation conjugates a paravector by a determinant-one axis paravector:
the left form is ``rev(L) * g * L``, the right form ``L * g * rev(L)``.
An axis of the shape ``{cos(phi) | i n sin(phi)}`` with a real unit
vector n rotates the spatial part by the angle ``2*phi`` about n, which
is how ordinary Euclidean rotations embed.  Mirror symmetry sandwiches
with a purely vectorial paravector and flips the scalar sign; composing
two mirrors yields a rotation whose axis is computed in closed form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import (
    DEFAULT_TOL,
    ONE,
    Paravector,
    component_scale,
    vcross,
    vdot,
)
from .errors import (
    BadUnitVector,
    DegenerateComposition,
    ImproperParavector,
    IsotropicNormal,
    ValidationError,
)
from .products import Orientation


@dataclass(frozen=True, slots=True)
class RotationAxis:
    """A determinant-one paravector acting as a rotation axis."""

    value: Paravector

    def __post_init__(self):
        d = self.value.det()
        sc = component_scale(self.value)
        if abs(d - 1.0) > 1e-6 * max(1.0, sc * sc):
            raise ImproperParavector(
                "a rotation axis must have determinant one; "
                "normalize a proper paravector first"
            )

    @classmethod
    def from_paravector(cls, p, tol=DEFAULT_TOL):
        """Normalize any proper paravector into an axis."""
        return cls(p.normalize(tol))

    @classmethod
    def identity(cls):
        return cls(ONE)


@dataclass(frozen=True, slots=True)
class SpatialRotation:
    """Euclidean rotation by ``2*phi`` about the real unit vector ``n``.

    ``axis_defined`` is False for a composition that came out as the
    identity, where the axis is arbitrary.
    """

    n: tuple
    phi: float
    axis_defined: bool = True

    def __post_init__(self):
        try:
            n = (float(self.n[0]), float(self.n[1]), float(self.n[2]))
        except (TypeError, ValueError, IndexError):
            raise BadUnitVector("axis must be a real 3-vector") from None
        if len(self.n) != 3:
            raise BadUnitVector("axis must be a real 3-vector")
        phi = float(self.phi)
        if not all(math.isfinite(c) for c in n) or not math.isfinite(phi):
            raise ValidationError("rotation parameters must be finite")
        norm = math.sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2])
        if abs(norm - 1.0) > 1e-6:
            raise BadUnitVector("axis vector must have unit length")
        object.__setattr__(self, "n", (n[0] / norm, n[1] / norm, n[2] / norm))
        object.__setattr__(self, "phi", phi)

    @classmethod
    def about(cls, axis, phi):
        """Build a rotation about any non-tiny real vector, normalizing it."""
        try:
            a = (float(axis[0]), float(axis[1]), float(axis[2]))
        except (TypeError, ValueError, IndexError):
            raise BadUnitVector("axis must be a real 3-vector") from None
        norm = math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])
        if not math.isfinite(norm) or norm < 1e-12:
            raise BadUnitVector("axis vector must be nonzero")
        return cls((a[0] / norm, a[1] / norm, a[2] / norm), float(phi))


def similarity(g, f, tol=DEFAULT_TOL):
    """Conjugation ``f^-1 * g * f`` by a non-singular axis f.

    Preserves the scalar component and is an equivalence relation.
    """
    return (f.inverse(tol) * g) * f


def rotate(g, axis, orientation=Orientation.LEFT):
    """Rotate g by a determinant-one axis.

    Left: ``rev(L) * g * L``; right: ``L * g * rev(L)``.  Rotation
    preserves both the determinant and the scalar component.
    """
    lam = axis.value
    if orientation is Orientation.LEFT:
        return (lam.rev() * g) * lam
    if orientation is Orientation.RIGHT:
        return (lam * g) * lam.rev()
    raise TypeError("orientation must be Orientation.RIGHT or Orientation.LEFT")


def spatial_axis(rotation):
    """Axis paravector ``{cos(phi) | i n sin(phi)}`` of a spatial rotation."""
    c = math.cos(rotation.phi)
    s = math.sin(rotation.phi)
    n = rotation.n
    return RotationAxis(Paravector(c, (1j * n[0] * s, 1j * n[1] * s, 1j * n[2] * s)))


def rotate_vector(w, rotation):
    """Rotate a real 3-vector by ``2*phi`` about the rotation's axis.

    Embeds the vector as a purely vectorial paravector, applies the left
    rotation, and reads the real vector back out.  Agrees with the
    classical axis-angle rotation formula.
    """
    try:
        wr = (float(w[0]), float(w[1]), float(w[2]))
    except (TypeError, ValueError, IndexError):
        raise ValidationError("expected a real 3-vector") from None
    g = Paravector(0j, (complex(wr[0]), complex(wr[1]), complex(wr[2])))
    r = rotate(g, spatial_axis(rotation), Orientation.LEFT)
    return (r.v[0].real, r.v[1].real, r.v[2].real)


def euler_compose(r1, r2, tol=DEFAULT_TOL):
    """Compose two spatial rotations into one.

    Multiplies the two axis paravectors and reads the half-angle
    parameters back out of the product, with the angle in [0, pi).
    Applying r1 then r2 equals applying the composition.  When the
    product is the identity the axis is arbitrary and the result carries
    ``axis_defined=False``.
    """
    p = spatial_axis(r1).value * spatial_axis(r2).value
    c = p.s.real
    m = (p.v[0].imag, p.v[1].imag, p.v[2].imag)
    s = math.sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2])
    if s <= tol.linear(1.0):
        return SpatialRotation((0.0, 0.0, 1.0), 0.0, axis_defined=False)
    return SpatialRotation((m[0] / s, m[1] / s, m[2] / s), math.atan2(s, c))


def _as_cvector(w):
    try:
        if len(w) != 3:
            raise ValidationError("expected a 3-vector")
        return (complex(w[0]), complex(w[1]), complex(w[2]))
    except ValidationError:
        raise
    except (TypeError, ValueError):
        raise ValidationError("expected a 3-vector of complex numbers") from None


def mirror(g, w, tol=DEFAULT_TOL):
    """Mirror symmetry with respect to the plane with (complex) normal w.

    Sandwiches g between two copies of ``{0|w}`` and divides by the
    negated square of the normal; the scalar sign flips, the vector
    component along the normal is reflected.  Normals with ``w.w = 0``
    are rejected.
    """
    w = _as_cvector(w)
    ww = vdot(w, w)
    sc = component_scale(w)
    if abs(ww) <= tol.quadratic(sc):
        raise IsotropicNormal("mirror normal squares to zero")
    plane = Paravector(0j, w)
    return ((plane * g) * plane) * (-1.0 / ww)


def compose_mirrors(w1, w2, tol=DEFAULT_TOL):
    """Rotation axis equivalent to mirroring in w1 and then in w2.

    The axis paravector is ``{w1.w2 | i w1 x w2}`` normalized to
    determinant one; applying the left rotation with it reproduces the
    two sequential mirrors.
    """
    w1 = _as_cvector(w1)
    w2 = _as_cvector(w2)
    for w in (w1, w2):
        if abs(vdot(w, w)) <= tol.quadratic(component_scale(w)):
            raise IsotropicNormal("mirror normal squares to zero")
    cr = vcross(w1, w2)
    num = Paravector(vdot(w1, w2), (1j * cr[0], 1j * cr[1], 1j * cr[2]))
    d = num.det()
    snn = component_scale(w1) * component_scale(w2)
    if abs(d) <= tol.abs + tol.rel * snn * snn:
        raise DegenerateComposition("mirror normals compose to no definite axis")
    return RotationAxis(num * (1.0 / cmath.sqrt(d)))


def axial_symmetry(g, w, tol=DEFAULT_TOL):
    """Straight-angle rotation of g around the (complex) vector w.

    Preserves the scalar component; for a real w the vector part maps to
    ``2 (v.n) n - v`` with n the unit direction of w.
    """
    w = _as_cvector(w)
    ww = vdot(w, w)
    if abs(ww) <= tol.quadratic(component_scale(w)):
        raise IsotropicNormal("axial vector squares to zero")
    left = Paravector(0j, (-1j * w[0], -1j * w[1], -1j * w[2]))
    right = Paravector(0j, (1j * w[0], 1j * w[1], 1j * w[2]))
    return ((left * g) * right) * (1.0 / ww)


def is_orthogonal_transform(p, tol=DEFAULT_TOL):
    """True when the paravector has determinant one.

    Such paravectors preserve scalar products and determinants under the
    transformations they represent.
    """
    return abs(p.det() - 1.0) <= tol.quadratic(component_scale(p))
