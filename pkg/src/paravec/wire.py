"""Flat JSON wire format for paravectors.

A paravector travels as a JSON array of eight decimal reals in the fixed
order ``[a, d, bx, by, bz, cx, cy, cz]``: the scalar is ``a + i d`` and
the vector is ``(bx + i cx, by + i cy, bz + i cz)``.  Serialization uses
Python's shortest round-trip float formatting, so parse/serialize
round-trips are bit exact.
"""

from __future__ import annotations

import json
import math

from .core import Paravector
from .errors import ArityError, ParseError


def _reject_constant(token):
    raise ParseError(f"non-finite number {token!r} is not allowed")


def load_number_array(text):
    """Parse a JSON array of finite numbers into a list of floats."""
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", position=exc.pos) from None
    if not isinstance(data, list):
        raise ParseError("expected a JSON array of numbers")
    out = []
    for i, item in enumerate(data):
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise ParseError(f"element {i} is not a number", position=i)
        value = float(item)
        if not math.isfinite(value):
            raise ParseError(f"element {i} is not finite", position=i)
        out.append(value)
    return out


def from_wire(numbers):
    """Build a paravector from the eight wire components."""
    if len(numbers) != 8:
        raise ArityError(f"expected 8 numbers, got {len(numbers)}")
    a, d, bx, by, bz, cx, cy, cz = (float(n) for n in numbers)
    return Paravector(complex(a, d), (complex(bx, cx), complex(by, cy), complex(bz, cz)))


def to_wire(p):
    """Eight wire components of a paravector."""
    v = p.v
    return [
        p.s.real,
        p.s.imag,
        v[0].real,
        v[1].real,
        v[2].real,
        v[0].imag,
        v[1].imag,
        v[2].imag,
    ]


def parse_paravector(text):
    """Parse the wire form of one paravector."""
    return from_wire(load_number_array(text))


def serialize_paravector(p):
    """Compact JSON wire form of a paravector."""
    return json.dumps(to_wire(p), separators=(",", ":"))


def serialize_numbers(numbers):
    """Compact JSON array of floats."""
    return json.dumps([float(n) for n in numbers], separators=(",", ":"))
