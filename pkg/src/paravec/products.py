"""Oriented integrated products and the scalar/vector products they carry.

The right product pairs the first operand with the reversion of the
second; the left product reverses the first operand instead.  Both share
the same scalar part, which is the paravector scalar product; the vector
part is the oriented paravector vector product.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Paravector, vdot


class Orientation(Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True, slots=True)
class IntegratedProduct:
    value: Paravector
    orientation: Orientation


def integrated(a, b, orientation=Orientation.RIGHT):
    """Oriented integrated product of two paravectors."""
    if orientation is Orientation.RIGHT:
        return IntegratedProduct(a * b.rev(), orientation)
    if orientation is Orientation.LEFT:
        return IntegratedProduct(a.rev() * b, orientation)
    raise TypeError("orientation must be Orientation.RIGHT or Orientation.LEFT")


def scalar_product(a, b):
    """s1*s2 - v1.v2, the shared scalar part of both oriented products."""
    return a.s * b.s - vdot(a.v, b.v)


def vector_product(a, b, orientation=Orientation.RIGHT):
    """Vector part of the oriented integrated product, as a complex 3-tuple."""
    return integrated(a, b, orientation).value.v
