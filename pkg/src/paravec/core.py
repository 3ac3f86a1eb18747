"""Paravector values and their ring operations.

A paravector is an immutable pair of one complex scalar and one complex
3-vector.  Addition is componentwise; multiplication follows the
non-commutative rule

    [s1|v1] [s2|v2] = [s1*s2 + v1.v2 | s2*v1 + s1*v2 + i (v1 x v2)]

where the dot and cross products are the plain bilinear (unconjugated)
ones extended to complex components.  On top of the ring structure the
module provides the two involutions (reversion and conjugation), the
determinant and vigor, inverses, the module (square root of a real
nonnegative determinant), normalization to determinant one, and a
tolerance-aware classifier.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    ImproperParavector,
    InvariantViolation,
    SingularParavector,
    ValidationError,
)

_NUMBER_TYPES = (int, float, complex)


def vdot(u, v):
    """Unconjugated bilinear dot product of two complex 3-vectors."""
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def vcross(u, v):
    """Cross product of two complex 3-vectors."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def format_complex(z):
    """Compact human-readable form of a complex number, e.g. ``1-2i``."""
    re, im = z.real, z.imag
    if im == 0.0:
        return f"{re:g}"
    if re == 0.0:
        return f"{im:g}i"
    sign = "+" if im >= 0 else "-"
    return f"{re:g}{sign}{abs(im):g}i"


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Absolute/relative tolerance pair for predicates and preconditions.

    A quantity of polynomial degree k in the operand components is tested
    against ``abs + rel * scale**k``, where scale is the largest absolute
    real component among the operands.  The degree-aware scaling keeps
    exact-arithmetic statements (determinant zero, determinant real)
    decidable in floating point.
    """

    abs: float = 1e-9
    rel: float = 1e-9

    def __post_init__(self):
        if not (math.isfinite(self.abs) and math.isfinite(self.rel)):
            raise ValidationError("tolerances must be finite")
        if self.abs < 0.0 or self.rel < 0.0:
            raise ValidationError("tolerances must be nonnegative")

    def linear(self, scale):
        return self.abs + self.rel * scale

    def quadratic(self, scale):
        return self.abs + self.rel * scale * scale


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, slots=True)
class Paravector:
    """Immutable pair of a complex scalar ``s`` and a complex 3-vector ``v``.

    Equality is exact and structural; use :meth:`approx_eq` for
    tolerance-based comparison.  All eight real components must be finite.
    """

    s: complex
    v: tuple

    def __post_init__(self):
        s = self.s
        if type(s) is not complex:
            s = complex(s)
        raw = self.v
        if (
            type(raw) is tuple
            and len(raw) == 3
            and type(raw[0]) is complex
            and type(raw[1]) is complex
            and type(raw[2]) is complex
        ):
            v = raw
        else:
            try:
                if len(raw) != 3:
                    raise ValidationError(
                        "vector part must hold exactly three components"
                    )
                v = (complex(raw[0]), complex(raw[1]), complex(raw[2]))
            except ValidationError:
                raise
            except (TypeError, ValueError):
                raise ValidationError(
                    "vector part must hold three complex numbers"
                ) from None
        if not (
            cmath.isfinite(s)
            and cmath.isfinite(v[0])
            and cmath.isfinite(v[1])
            and cmath.isfinite(v[2])
        ):
            raise ValidationError("paravector components must be finite")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "v", v)

    # -- involutions -------------------------------------------------

    def rev(self):
        """Reversion: flip the sign of the vector part."""
        v = self.v
        return Paravector(self.s, (-v[0], -v[1], -v[2]))

    def conj(self):
        """Conjugation: complex-conjugate every component."""
        v = self.v
        return Paravector(
            self.s.conjugate(),
            (v[0].conjugate(), v[1].conjugate(), v[2].conjugate()),
        )

    # -- quadratic forms ---------------------------------------------

    def vig(self):
        """Product with the own conjugate.

        The result is a real paravector whose scalar part is the sum of
        the squares of all eight real components (hence nonnegative).
        """
        return mul(self, self.conj())

    def det(self):
        """Scalar of the product with the own reversion (a complex number).

        The vector part of that product must vanish; a leak beyond
        tolerance signals a broken multiplication and raises
        :class:`InvariantViolation`.
        """
        p = mul(self, self.rev())
        thr = DEFAULT_TOL.quadratic(_pv_scale(self))
        if abs(p.v[0]) > thr or abs(p.v[1]) > thr or abs(p.v[2]) > thr:
            raise InvariantViolation(
                "product with the reversion has a nonvanishing vector part"
            )
        return p.s

    def inverse(self, tol=DEFAULT_TOL):
        """Multiplicative inverse: reversion divided by the determinant.

        Raises :class:`SingularParavector` when the determinant is zero
        to tolerance.
        """
        d = self.det()
        if abs(d) <= tol.quadratic(_pv_scale(self)):
            raise SingularParavector("singular paravector has no inverse")
        return self.rev() * (1.0 / d)

    def module(self, tol=DEFAULT_TOL):
        """Nonnegative real square root of the determinant.

        Defined on proper or singular paravectors only; raises
        :class:`ImproperParavector` when the determinant has a significant
        imaginary part or a negative real part.
        """
        d = self.det()
        thr = tol.quadratic(_pv_scale(self))
        if abs(d.imag) > thr or d.real < -thr:
            raise ImproperParavector("module needs a real nonnegative determinant")
        return math.sqrt(d.real) if d.real > 0.0 else 0.0

    def normalize(self, tol=DEFAULT_TOL):
        """Divide by the module, giving determinant one.

        Requires a proper paravector; singular input is an error since no
        determinant-one rescaling exists for it.
        """
        d = self.det()
        thr = tol.quadratic(_pv_scale(self))
        if abs(d.imag) > thr or d.real <= thr:
            raise ImproperParavector("only a proper paravector can be normalized")
        return self * (1.0 / math.sqrt(d.real))

    # -- comparison and display --------------------------------------

    def approx_eq(self, other, tol=DEFAULT_TOL):
        return approx_eq(self, other, tol)

    def __str__(self):
        v = self.v
        return (
            f"{{{format_complex(self.s)} | "
            f"({format_complex(v[0])}, {format_complex(v[1])}, {format_complex(v[2])})}}"
        )

    # -- operators ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        v, w = self.v, other.v
        return Paravector(self.s + other.s, (v[0] + w[0], v[1] + w[1], v[2] + w[2]))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        v, w = self.v, other.v
        return Paravector(self.s - other.s, (v[0] - w[0], v[1] - w[1], v[2] - w[2]))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        v = self.v
        return Paravector(-self.s, (-v[0], -v[1], -v[2]))

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(other, self)

    def __truediv__(self, other):
        if isinstance(other, _NUMBER_TYPES) and not isinstance(other, bool):
            return mul(self, Paravector(1.0 / complex(other), (0j, 0j, 0j)))
        return NotImplemented


def _coerce(x):
    if isinstance(x, Paravector):
        return x
    if isinstance(x, _NUMBER_TYPES) and not isinstance(x, bool):
        return Paravector(complex(x), (0j, 0j, 0j))
    return NotImplemented


def mul(a, b):
    """The paravector product.

    Scalars embed as paravectors with zero vector part, so multiplication
    by a plain number goes through this same rule.
    """
    s1, s2 = a.s, b.s
    x1, y1, z1 = a.v
    x2, y2, z2 = b.v
    return Paravector(
        s1 * s2 + x1 * x2 + y1 * y2 + z1 * z2,
        (
            s2 * x1 + s1 * x2 + 1j * (y1 * z2 - z1 * y2),
            s2 * y1 + s1 * y2 + 1j * (z1 * x2 - x1 * z2),
            s2 * z1 + s1 * z2 + 1j * (x1 * y2 - y1 * x2),
        ),
    )


ZERO = Paravector(0j, (0j, 0j, 0j))
ONE = Paravector(1 + 0j, (0j, 0j, 0j))


@dataclass(frozen=True, slots=True)
class Classification:
    """Tolerance-aware verdicts about one paravector.

    ``is_proper`` and ``is_singular`` are mutually exclusive;
    ``is_orthogonal`` implies ``is_proper``.  ``tol`` records the
    tolerance pair the verdicts were computed with.
    """

    det: complex
    is_proper: bool
    is_singular: bool
    is_orthogonal: bool
    is_special: bool
    is_unitar: bool
    tol: Tolerance


def classify(p, tol=DEFAULT_TOL):
    """Evaluate the proper/singular/orthogonal/special/unitar flags."""
    d = p.det()
    sc = _pv_scale(p)
    qthr = tol.quadratic(sc)
    singular = abs(d) <= qthr
    proper = (not singular) and abs(d.imag) <= qthr and d.real > 0.0
    orthogonal = proper and abs(d - 1.0) <= qthr
    lthr = tol.linear(sc)
    v = p.v
    special = (
        abs(p.s.imag) <= lthr
        and abs(v[0].real) <= lthr
        and abs(v[1].real) <= lthr
        and abs(v[2].real) <= lthr
    )
    w = p.vig()
    unitar = (
        abs(w.s - 1.0) <= qthr
        and abs(w.v[0]) <= qthr
        and abs(w.v[1]) <= qthr
        and abs(w.v[2]) <= qthr
    )
    return Classification(d, proper, singular, orthogonal, special, unitar, tol)


def _pv_scale(p):
    s, v = p.s, p.v
    m = abs(s.real)
    x = abs(s.imag)
    if x > m:
        m = x
    for z in v:
        x = abs(z.real)
        if x > m:
            m = x
        x = abs(z.imag)
        if x > m:
            m = x
    return m


def component_scale(*items):
    """Largest absolute real component among paravectors, vectors, numbers."""
    m = 0.0
    for item in items:
        if isinstance(item, Paravector):
            x = _pv_scale(item)
            if x > m:
                m = x
            continue
        if isinstance(item, (tuple, list)):
            values = item
        else:
            values = (item,)
        for z in values:
            z = complex(z)
            r = abs(z.real)
            if r > m:
                m = r
            i = abs(z.imag)
            if i > m:
                m = i
    return m


def component_norm(p):
    """Euclidean norm of the eight real components of a paravector."""
    s, v = p.s, p.v
    return math.sqrt(
        s.real * s.real
        + s.imag * s.imag
        + v[0].real * v[0].real
        + v[0].imag * v[0].imag
        + v[1].real * v[1].real
        + v[1].imag * v[1].imag
        + v[2].real * v[2].real
        + v[2].imag * v[2].imag
    )


def approx_eq(a, b, tol=DEFAULT_TOL):
    """Componentwise closeness, scaled by the largest component of either side."""
    sa = _pv_scale(a)
    sb = _pv_scale(b)
    thr = tol.linear(sa if sa > sb else sb)
    if abs(a.s - b.s) > thr:
        return False
    va, vb = a.v, b.v
    return (
        abs(va[0] - vb[0]) <= thr
        and abs(va[1] - vb[1]) <= thr
        and abs(va[2] - vb[2]) <= thr
    )
