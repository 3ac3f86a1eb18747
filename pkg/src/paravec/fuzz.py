"""Seeded property-fuzz campaigns over the whole algebra.

Every algebraic law the package promises is registered here as a named
property grouped into suites (ring, involution, detvig, product,
parallel, metric, angle, rotation, mirror, matrix, orthogonal).  A
campaign draws one deterministic pack of operands per trial and evaluates
every property against it; the report lists pass/fail counts and the
first counterexample per property.

Determinism and portability
---------------------------
Randomness comes from SplitMix64, a published 64-bit generator:
the state advances by the odd constant 0x9E3779B97F4A7C15 and each
output is the finalizer ``z ^= z>>30, z*=0xBF58476D1CE4E5B9, z ^= z>>27,
z *= 0x94D049BB133111EB, z ^= z>>31`` applied to the state.  Trial i of a
campaign with seed s uses a fresh generator seeded with
``mix(mix(s) + GAMMA*(i+1))`` where ``mix`` is that same finalizer, so
trials are independent streams and a report is a pure function of
(seed, trials, tolerance).  Components are drawn uniformly from [-2, 2];
with 10% probability a trial swaps in a structured corner case (zero,
identity, a singular pair, special/unitar forms, scaled copies, extreme
and tiny components).

Mutation self-test
------------------
``run_fuzz(..., mutant=...)`` temporarily installs one of three
documented defects - ``mul-drop-cross`` (drops the cross term of the
product), ``rev-sign`` (reversion also flips the scalar sign), and
``matrix-transpose`` (the 4x4 embedding is transposed) - to demonstrate
the suite catches each within a small number of trials.
"""

from __future__ import annotations

import cmath
import math
from contextlib import contextmanager
from dataclasses import dataclass
from functools import cached_property

from . import core, matrices
from .core import (
    DEFAULT_TOL,
    ONE,
    ZERO,
    Paravector,
    approx_eq,
    classify,
    component_scale,
    vcross,
    vdot,
)
from .geometry import (
    Angle,
    angle,
    compose_angles,
    explement,
    is_parallel,
    is_perpendicular,
    is_singularly_parallel,
    is_spatially_parallel,
    parallel_ratio,
)
from .products import Orientation, integrated, scalar_product, vector_product
from .transforms import (
    RotationAxis,
    SpatialRotation,
    axial_symmetry,
    compose_mirrors,
    euler_compose,
    is_orthogonal_transform,
    mirror,
    rotate,
    rotate_vector,
    similarity,
)
from .wire import to_wire

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

RIGHT = Orientation.RIGHT
LEFT = Orientation.LEFT


def mix64(x):
    """SplitMix64 output finalizer (a bijective 64-bit scrambler)."""
    x &= _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


class SplitMix64:
    """The SplitMix64 pseudo-random generator."""

    __slots__ = ("_state",)

    def __init__(self, seed):
        self._state = seed & _MASK

    def next_u64(self):
        self._state = (self._state + _GAMMA) & _MASK
        return mix64(self._state)

    def u01(self):
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform(self, lo, hi):
        return lo + (hi - lo) * self.u01()

    def below(self, n):
        return self.next_u64() % n


def trial_seed(seed, index):
    """Seed of the per-trial generator; distinct scrambled streams per index."""
    return mix64((mix64(seed) + _GAMMA * (index + 1)) & _MASK)


# ---------------------------------------------------------------------------
# Trial generation.  Everything here builds paravectors from raw components
# only (no calls into the algebra under test), so generation stays sound even
# when a mutant is installed.
# ---------------------------------------------------------------------------


def _det_closed(p):
    return p.s * p.s - vdot(p.v, p.v)


def _scaled(p, z):
    v = p.v
    return Paravector(p.s * z, (v[0] * z, v[1] * z, v[2] * z))


def _sprod_closed(a, b):
    return a.s * b.s - vdot(a.v, b.v)


def _draw_pv(rng):
    a, d = rng.uniform(-2, 2), rng.uniform(-2, 2)
    b = [rng.uniform(-2, 2) for _ in range(3)]
    c = [rng.uniform(-2, 2) for _ in range(3)]
    return Paravector(
        complex(a, d),
        (complex(b[0], c[0]), complex(b[1], c[1]), complex(b[2], c[2])),
    )


def _draw_complex(rng, min_abs=0.0):
    while True:
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if abs(z) >= min_abs:
            return z


def _draw_real(rng, min_abs=0.0):
    while True:
        x = rng.uniform(-2, 2)
        if abs(x) >= min_abs:
            return x


def _nonsingular(rng, min_det=0.1):
    for _ in range(32):
        p = _draw_pv(rng)
        if abs(_det_closed(p)) > min_det:
            return p
    return Paravector(2 + 0j, (1 + 0j, 0j, 0j))


def _proper(rng, min_det=0.1):
    p = _nonsingular(rng, min_det)
    d = _det_closed(p)
    return _scaled(p, cmath.exp(-0.5j * cmath.phase(d)))


def _singular(rng):
    v = tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3))
    return Paravector(cmath.sqrt(vdot(v, v)), v)


def _perp_pair(rng):
    a = _nonsingular(rng)
    da = _det_closed(a)
    for _ in range(32):
        raw = _draw_pv(rng)
        k = _sprod_closed(a, raw) / da
        b = raw - _scaled(a, k)
        if abs(_det_closed(b)) > 0.05 and component_scale(b) > 0.05:
            return a, b
    return Paravector(1 + 0j, (0j, 0j, 0j)), Paravector(0j, (1 + 0j, 0j, 0j))


def _unit_vector(rng):
    while True:
        v = [rng.uniform(-1, 1) for _ in range(3)]
        n = math.sqrt(v[0] ** 2 + v[1] ** 2 + v[2] ** 2)
        if n >= 0.3:
            return (v[0] / n, v[1] / n, v[2] / n)


def _real_vector(rng, min_norm=0.2):
    while True:
        v = (rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        if math.sqrt(v[0] ** 2 + v[1] ** 2 + v[2] ** 2) >= min_norm:
            return v


def _complex_normal(rng):
    while True:
        v = tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3))
        if abs(vdot(v, v)) >= 0.05:
            return v


def _special(rng):
    while True:
        a = rng.uniform(-2, 2)
        c = [rng.uniform(-2, 2) for _ in range(3)]
        if a * a + c[0] ** 2 + c[1] ** 2 + c[2] ** 2 >= 0.05:
            return Paravector(complex(a), (1j * c[0], 1j * c[1], 1j * c[2]))


def _unitar(rng):
    t = rng.uniform(0.0, math.pi)
    n = _unit_vector(rng)
    s = math.sin(t)
    return Paravector(math.cos(t), (1j * n[0] * s, 1j * n[1] * s, 1j * n[2] * s))


def _real_paravector(rng):
    return Paravector(
        complex(rng.uniform(-2, 2)),
        (
            complex(rng.uniform(-2, 2)),
            complex(rng.uniform(-2, 2)),
            complex(rng.uniform(-2, 2)),
        ),
    )


def _hyperbolic_pair(rng):
    """Two real proper paravectors with collinear vector parts.

    Their integrated product is fully real, so the angle between them is
    of the hyperbolic kind.
    """
    n = _unit_vector(rng)
    pair = []
    for _ in range(2):
        u = rng.uniform(0.3, 1.5)
        t = rng.uniform(0.5, 1.5)
        sign = 1.0 if rng.u01() < 0.5 else -1.0
        pair.append(
            Paravector(
                sign * u * math.cosh(t),
                (complex(u * n[0]), complex(u * n[1]), complex(u * n[2])),
            )
        )
    return pair[0], pair[1]


def _sphere_point(rng):
    x = (rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
    r = math.sqrt(x[0] ** 2 + x[1] ** 2 + x[2] ** 2)
    return Paravector(r, (complex(x[0]), complex(x[1]), complex(x[2])))


def _spatial_pair(rng):
    """Spatially parallel but deliberately non-parallel non-singular pair."""
    for _ in range(64):
        s1 = _draw_complex(rng)
        s2 = _draw_complex(rng)
        mu = _draw_complex(rng, 0.3)
        q = tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3))
        a = Paravector(s1, q)
        b = Paravector(s2, (q[0] * mu, q[1] * mu, q[2] * mu))
        qn = math.sqrt(abs(q[0]) ** 2 + abs(q[1]) ** 2 + abs(q[2]) ** 2)
        if (
            abs(_det_closed(a)) > 0.1
            and abs(_det_closed(b)) > 0.1
            and abs(s2 - mu * s1) * qn > 0.1
        ):
            return a, b
    a = Paravector(2 + 0j, (1 + 0j, 0j, 0j))
    return a, Paravector(3 + 0j, (2 + 0j, 0j, 0j))


def _corner_triple(rng):
    pick = rng.below(10)
    g = _draw_pv(rng)
    if pick == 0:
        return ZERO, g, _draw_pv(rng)
    if pick == 1:
        return ONE, ONE, g
    if pick == 2:
        return Paravector(1 + 0j, (1 + 0j, 0j, 0j)), g, ONE
    if pick == 3:
        return _special(rng), _special(rng), g
    if pick == 4:
        u = _unitar(rng)
        u_rev = Paravector(u.s, (-u.v[0], -u.v[1], -u.v[2]))
        return u, u_rev, g
    if pick == 5:
        lam = _draw_real(rng, 0.2)
        return g, _scaled(g, lam), g
    if pick == 6:
        g_rev = Paravector(g.s, (-g.v[0], -g.v[1], -g.v[2]))
        g_conj = Paravector(
            g.s.conjugate(),
            (g.v[0].conjugate(), g.v[1].conjugate(), g.v[2].conjugate()),
        )
        return g, g_rev, g_conj
    if pick == 7:
        signs = [1.0 if rng.u01() < 0.5 else -1.0 for _ in range(8)]
        return (
            Paravector(
                complex(2 * signs[0], 2 * signs[1]),
                (
                    complex(2 * signs[2], 2 * signs[5]),
                    complex(2 * signs[3], 2 * signs[6]),
                    complex(2 * signs[4], 2 * signs[7]),
                ),
            ),
            g,
            _draw_pv(rng),
        )
    if pick == 8:
        return _scaled(g, 1e-12), g, _draw_pv(rng)
    s = _sphere_point(rng)
    return s, Paravector(s.s, (-s.v[0], -s.v[1], -s.v[2])), g


class TrialPack:
    """All the operand families one trial needs, drawn in a fixed order."""

    def __init__(self, rng):
        if rng.u01() < 0.10:
            self.a, self.b, self.c = _corner_triple(rng)
        else:
            self.a, self.b, self.c = _draw_pv(rng), _draw_pv(rng), _draw_pv(rng)
        self.lam = _draw_complex(rng, 0.3)
        self.mu = _draw_complex(rng, 0.3)
        self.s_real = _draw_real(rng, 0.3)
        self.tau = _draw_complex(rng)
        self.nonsing1 = _nonsingular(rng)
        self.nonsing2 = _nonsingular(rng)
        self.proper1 = _proper(rng)
        self.proper2 = _proper(rng)
        self.perp1, self.perp2 = _perp_pair(rng)
        self.par1 = _nonsingular(rng)
        self.par2 = _scaled(self.par1, self.lam)
        self.sing1 = _singular(rng)
        self.sing2 = _singular(rng)
        self.sphere = _sphere_point(rng)
        self.special1 = _special(rng)
        self.special2 = _special(rng)
        self.unitar1 = _unitar(rng)
        self.realpv1 = _real_paravector(rng)
        self.realpv2 = _real_paravector(rng)
        self.hyp1, self.hyp2 = _hyperbolic_pair(rng)
        self.sp_a, self.sp_b = _spatial_pair(rng)
        self.n1 = _unit_vector(rng)
        self.n2 = _unit_vector(rng)
        self.phi1 = rng.uniform(0.0, math.pi)
        self.phi2 = rng.uniform(0.0, math.pi)
        self.w1 = _real_vector(rng)
        self.w2 = _real_vector(rng)
        self.om1 = _complex_normal(rng)
        self.om2 = _complex_normal(rng)
        self.rot1 = SpatialRotation(self.n1, self.phi1)
        self.rot2 = SpatialRotation(self.n2, self.phi2)

    @cached_property
    def axis1(self):
        return RotationAxis.from_paravector(self.proper1)

    @cached_property
    def axis2(self):
        return RotationAxis.from_paravector(self.proper2)


def make_pack(seed, index):
    """The deterministic operand pack of one trial."""
    return TrialPack(SplitMix64(trial_seed(seed, index)))


# ---------------------------------------------------------------------------
# Comparison helpers.  Equality checks scale to the compared values; checks
# against zero take an explicit scale from the inputs that produced them.
# ---------------------------------------------------------------------------


def _close_c(x, y, tol):
    return abs(x - y) <= tol.abs + tol.rel * max(abs(x), abs(y))


def _close_v(u, v, tol):
    sc = max(max(abs(x) for x in u), max(abs(x) for x in v))
    thr = tol.abs + tol.rel * sc
    return all(abs(x - y) <= thr for x, y in zip(u, v))


def _zero_c(x, tol, scale):
    return abs(x) <= tol.abs + tol.rel * scale


def _vnorm(v):
    return math.sqrt(abs(v[0]) ** 2 + abs(v[1]) ** 2 + abs(v[2]) ** 2)


# ---------------------------------------------------------------------------
# Property registry.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Property:
    suite: str
    name: str
    inputs: tuple
    check: object

    @property
    def full_name(self):
        return f"{self.suite}/{self.name}"


_PROPS = []


def _prop(suite, name, inputs):
    def deco(fn):
        _PROPS.append(Property(suite, name, tuple(inputs), fn))
        return fn

    return deco


# -- ring axioms ------------------------------------------------------------


@_prop("ring", "add-commutative", ("a", "b"))
def _(p, tol):
    return approx_eq(p.a + p.b, p.b + p.a, tol)


@_prop("ring", "add-associative", ("a", "b", "c"))
def _(p, tol):
    return approx_eq((p.a + p.b) + p.c, p.a + (p.b + p.c), tol)


@_prop("ring", "add-identity", ("a",))
def _(p, tol):
    return approx_eq(p.a + ZERO, p.a, tol)


@_prop("ring", "add-opposite", ("a",))
def _(p, tol):
    return approx_eq(p.a + (-p.a), ZERO, tol)


@_prop("ring", "mul-identity", ("a",))
def _(p, tol):
    return approx_eq(ONE * p.a, p.a, tol) and approx_eq(p.a * ONE, p.a, tol)


@_prop("ring", "mul-associative", ("a", "b", "c"))
def _(p, tol):
    return approx_eq((p.a * p.b) * p.c, p.a * (p.b * p.c), tol)


@_prop("ring", "distributes-left", ("a", "b", "c"))
def _(p, tol):
    return approx_eq(p.a * (p.b + p.c), p.a * p.b + p.a * p.c, tol)


@_prop("ring", "distributes-right", ("a", "b", "c"))
def _(p, tol):
    return approx_eq((p.a + p.b) * p.c, p.a * p.c + p.b * p.c, tol)


# -- involution table ---------------------------------------------------------


@_prop("involution", "rev-involution", ("a",))
def _(p, tol):
    return approx_eq(p.a.rev().rev(), p.a, tol)


@_prop("involution", "conj-involution", ("a",))
def _(p, tol):
    return approx_eq(p.a.conj().conj(), p.a, tol)


@_prop("involution", "rev-additive", ("a", "b"))
def _(p, tol):
    return approx_eq((p.a + p.b).rev(), p.a.rev() + p.b.rev(), tol)


@_prop("involution", "conj-additive", ("a", "b"))
def _(p, tol):
    return approx_eq((p.a + p.b).conj(), p.a.conj() + p.b.conj(), tol)


@_prop("involution", "rev-antimultiplicative", ("a", "b"))
def _(p, tol):
    return approx_eq((p.a * p.b).rev(), p.b.rev() * p.a.rev(), tol)


@_prop("involution", "conj-antimultiplicative", ("a", "b"))
def _(p, tol):
    return approx_eq((p.a * p.b).conj(), p.b.conj() * p.a.conj(), tol)


@_prop("involution", "rev-conj-commute", ("a",))
def _(p, tol):
    return approx_eq(p.a.rev().conj(), p.a.conj().rev(), tol)


# -- determinant and vigor ----------------------------------------------------


def _det_components(g):
    a, d = g.s.real, g.s.imag
    b = (g.v[0].real, g.v[1].real, g.v[2].real)
    c = (g.v[0].imag, g.v[1].imag, g.v[2].imag)
    bb = b[0] ** 2 + b[1] ** 2 + b[2] ** 2
    cc = c[0] ** 2 + c[1] ** 2 + c[2] ** 2
    bc = b[0] * c[0] + b[1] * c[1] + b[2] * c[2]
    return complex(a * a - bb + cc - d * d, 2.0 * (a * d - bc))


def _vig_components(g):
    a, d = g.s.real, g.s.imag
    b = (g.v[0].real, g.v[1].real, g.v[2].real)
    c = (g.v[0].imag, g.v[1].imag, g.v[2].imag)
    bxc = (
        b[1] * c[2] - b[2] * c[1],
        b[2] * c[0] - b[0] * c[2],
        b[0] * c[1] - b[1] * c[0],
    )
    scalar = a * a + d * d + b[0] ** 2 + b[1] ** 2 + b[2] ** 2 + c[0] ** 2 + c[1] ** 2 + c[2] ** 2
    vec = tuple(2.0 * (a * b[k] + d * c[k] + bxc[k]) for k in range(3))
    return Paravector(scalar, (complex(vec[0]), complex(vec[1]), complex(vec[2])))


@_prop("detvig", "det-closed-form", ("a",))
def _(p, tol):
    return _close_c(p.a.det(), _det_components(p.a), tol)


@_prop("detvig", "vig-closed-form", ("a",))
def _(p, tol):
    return approx_eq(p.a.vig(), _vig_components(p.a), tol)


@_prop("detvig", "vig-real-nonnegative", ("a",))
def _(p, tol):
    w = p.a.vig()
    thr = tol.quadratic(component_scale(p.a))
    return (
        abs(w.s.imag) <= thr
        and w.s.real >= -thr
        and abs(w.v[0].imag) <= thr
        and abs(w.v[1].imag) <= thr
        and abs(w.v[2].imag) <= thr
    )


@_prop("detvig", "det-multiplicative", ("a", "b"))
def _(p, tol):
    return _close_c((p.a * p.b).det(), p.a.det() * p.b.det(), tol)


@_prop("detvig", "det-of-rev", ("a",))
def _(p, tol):
    return _close_c(p.a.rev().det(), p.a.det(), tol)


@_prop("detvig", "det-of-conj", ("a",))
def _(p, tol):
    return _close_c(p.a.conj().det(), p.a.det().conjugate(), tol)


@_prop("detvig", "rev-product-commutes", ("a",))
def _(p, tol):
    return approx_eq(p.a * p.a.rev(), p.a.rev() * p.a, tol)


@_prop("detvig", "proper-singular-condition", ("a",))
def _(p, tol):
    cls = classify(p.a, tol)
    if not (cls.is_proper or cls.is_singular):
        return True
    g = p.a
    ad = g.s.real * g.s.imag
    bc = (
        g.v[0].real * g.v[0].imag
        + g.v[1].real * g.v[1].imag
        + g.v[2].real * g.v[2].imag
    )
    return abs(ad - bc) <= tol.quadratic(component_scale(g))


@_prop("detvig", "module-scalar-multiplicative", ("proper1", "s_real"))
def _(p, tol):
    lhs = (p.proper1 * p.s_real).module(tol)
    return _close_c(lhs, abs(p.s_real) * p.proper1.module(tol), tol)


@_prop("detvig", "module-multiplicative", ("proper1", "proper2"))
def _(p, tol):
    lhs = (p.proper1 * p.proper2).module(tol)
    return _close_c(lhs, p.proper1.module(tol) * p.proper2.module(tol), tol)


@_prop("detvig", "orthogonal-rev-is-inverse", ("proper1",))
def _(p, tol):
    lam = p.proper1.normalize(tol)
    return approx_eq(lam.inverse(tol), lam.rev(), tol)


@_prop("detvig", "special-closure", ("special1", "special2"))
def _(p, tol):
    product = p.special1 * p.special2
    total = p.special1 + p.special2
    inv = p.special1.inverse(tol)
    return (
        classify(product, tol).is_special
        and classify(total, tol).is_special
        and classify(inv, tol).is_special
    )


@_prop("detvig", "singular-absorbs", ("sing1", "b"))
def _(p, tol):
    product = p.sing1 * p.b
    sc = component_scale(p.sing1, p.b)
    return _zero_c(product.det(), tol, sc * sc * sc * sc)


# -- integrated, scalar, and vector products ----------------------------------


@_prop("product", "scalar-parts-agree", ("a", "b"))
def _(p, tol):
    r = integrated(p.a, p.b, RIGHT).value.s
    l = integrated(p.a, p.b, LEFT).value.s
    sp = scalar_product(p.a, p.b)
    return _close_c(r, sp, tol) and _close_c(l, sp, tol)


@_prop("product", "det-factorizes", ("a", "b"))
def _(p, tol):
    target = p.a.det() * p.b.det()
    for o in (RIGHT, LEFT):
        if not _close_c(integrated(p.a, p.b, o).value.det(), target, tol):
            return False
    sp = scalar_product(p.a, p.b)
    vv = vector_product(p.a, p.b, RIGHT)
    return _close_c(sp * sp - vdot(vv, vv), target, tol)


@_prop("product", "right-add-bilinear", ("a", "b", "c"))
def _(p, tol):
    lhs = integrated(p.a + p.b, p.c, RIGHT).value
    rhs = integrated(p.a, p.c, RIGHT).value + integrated(p.b, p.c, RIGHT).value
    return approx_eq(lhs, rhs, tol)


@_prop("product", "left-add-bilinear", ("a", "b", "c"))
def _(p, tol):
    lhs = integrated(p.a + p.b, p.c, LEFT).value
    rhs = integrated(p.a, p.c, LEFT).value + integrated(p.b, p.c, LEFT).value
    return approx_eq(lhs, rhs, tol)


@_prop("product", "scalar-homogeneous-right", ("a", "b", "lam"))
def _(p, tol):
    base = integrated(p.a, p.b, RIGHT).value * p.lam
    left_scaled = integrated(p.a * p.lam, p.b, RIGHT).value
    right_scaled = integrated(p.a, p.b * p.lam, RIGHT).value
    return approx_eq(left_scaled, base, tol) and approx_eq(right_scaled, base, tol)


@_prop("product", "scalar-homogeneous-left", ("a", "b", "lam"))
def _(p, tol):
    base = integrated(p.a, p.b, LEFT).value * p.lam
    left_scaled = integrated(p.a * p.lam, p.b, LEFT).value
    right_scaled = integrated(p.a, p.b * p.lam, LEFT).value
    return approx_eq(left_scaled, base, tol) and approx_eq(right_scaled, base, tol)


@_prop("product", "rev-swaps-arguments", ("a", "b"))
def _(p, tol):
    for o in (RIGHT, LEFT):
        if not approx_eq(
            integrated(p.a, p.b, o).value.rev(), integrated(p.b, p.a, o).value, tol
        ):
            return False
    return True


@_prop("product", "self-product-is-det", ("a",))
def _(p, tol):
    expected = Paravector(p.a.det(), (0j, 0j, 0j))
    return approx_eq(integrated(p.a, p.a, RIGHT).value, expected, tol) and approx_eq(
        integrated(p.a, p.a, LEFT).value, expected, tol
    )


@_prop("product", "scalar-symmetric", ("a", "b"))
def _(p, tol):
    return _close_c(scalar_product(p.a, p.b), scalar_product(p.b, p.a), tol)


@_prop("product", "singular-self-scalar", ("sing1",))
def _(p, tol):
    sc = component_scale(p.sing1)
    return _zero_c(scalar_product(p.sing1, p.sing1), tol, sc * sc) and classify(
        p.sing1, tol
    ).is_singular


@_prop("product", "spatial-embedding-dot", ("w1", "w2"))
def _(p, tol):
    w1, w2 = p.w1, p.w2
    dot = w1[0] * w2[0] + w1[1] * w2[1] + w1[2] * w2[2]
    real_a = Paravector(0j, (complex(w1[0]), complex(w1[1]), complex(w1[2])))
    real_b = Paravector(0j, (complex(w2[0]), complex(w2[1]), complex(w2[2])))
    imag_a = Paravector(0j, (1j * w1[0], 1j * w1[1], 1j * w1[2]))
    imag_b = Paravector(0j, (1j * w2[0], 1j * w2[1], 1j * w2[2]))
    return _close_c(scalar_product(real_a, real_b), -dot, tol) and _close_c(
        scalar_product(imag_a, imag_b), dot, tol
    )


@_prop("product", "real-vector-product-conjugation", ("realpv1", "realpv2"))
def _(p, tol):
    right = vector_product(p.realpv1, p.realpv2, RIGHT)
    left = vector_product(p.realpv1, p.realpv2, LEFT)
    negated_conj = tuple(-z.conjugate() for z in left)
    return _close_v(right, negated_conj, tol)


# -- parallelism and perpendicularity -----------------------------------------


@_prop("parallel", "parallel-iff-scalar-multiple", ("par1", "par2", "nonsing1", "nonsing2"))
def _(p, tol):
    if not is_parallel(p.par2, p.par1, tol):
        return False
    lam = parallel_ratio(p.par2, p.par1)
    if not _close_c(lam, p.lam, tol):
        return False
    if not approx_eq(p.par2, p.par1 * lam, tol):
        return False
    generic = is_parallel(p.nonsing1, p.nonsing2, tol)
    recovered = approx_eq(
        p.nonsing1, p.nonsing2 * parallel_ratio(p.nonsing1, p.nonsing2), tol
    )
    return generic == recovered


@_prop("parallel", "parallel-equivalence", ("par1", "par2", "mu"))
def _(p, tol):
    third = p.par2 * p.mu
    return (
        is_parallel(p.par1, p.par1, tol)
        and is_parallel(p.par1, p.par2, tol)
        and is_parallel(p.par2, p.par1, tol)
        and is_parallel(p.par1, third, tol)
    )


@_prop("parallel", "perpendicular-irreflexive", ("nonsing1",))
def _(p, tol):
    return not is_perpendicular(p.nonsing1, p.nonsing1, tol)


@_prop("parallel", "perpendicular-symmetric", ("perp1", "perp2"))
def _(p, tol):
    return is_perpendicular(p.perp1, p.perp2, tol) and is_perpendicular(
        p.perp2, p.perp1, tol
    )


@_prop("parallel", "perpendicular-transport", ("perp1", "perp2", "mu"))
def _(p, tol):
    return is_perpendicular(p.perp1, p.perp2 * p.mu, tol)


@_prop("parallel", "self-perpendicular-iff-singular", ("sing1", "nonsing1"))
def _(p, tol):
    sc = component_scale(p.sing1)
    singular_side = _zero_c(scalar_product(p.sing1, p.sing1), tol, sc * sc)
    nc = component_scale(p.nonsing1)
    nonsingular_side = abs(scalar_product(p.nonsing1, p.nonsing1)) > tol.quadratic(nc)
    return singular_side and nonsingular_side


@_prop("parallel", "orthogonal-parallel-sign", ("proper1", "proper2"))
def _(p, tol):
    l1 = p.proper1.normalize(tol)
    l2 = p.proper2.normalize(tol)
    if not (is_parallel(l1, l1, tol) and is_parallel(l1, -l1, tol)):
        return False
    if is_parallel(l1, l2, tol):
        return approx_eq(l2, l1, tol) or approx_eq(l2, -l1, tol)
    return True


@_prop("parallel", "conj-preserves-perpendicular", ("perp1", "perp2"))
def _(p, tol):
    return is_perpendicular(p.perp1.conj(), p.perp2.conj(), tol)


@_prop("parallel", "conj-preserves-parallel", ("par1", "par2"))
def _(p, tol):
    return is_parallel(p.par1.conj(), p.par2.conj(), tol)


@_prop("parallel", "vig-preserves-parallel", ("par1", "par2"))
def _(p, tol):
    return is_parallel(p.par1.vig(), p.par2.vig(), tol)


@_prop("parallel", "parallel-implies-spatial", ("par1", "par2"))
def _(p, tol):
    return is_spatially_parallel(p.par1, p.par2, tol)


@_prop("parallel", "spatial-without-parallel", ("sp_a", "sp_b"))
def _(p, tol):
    return is_spatially_parallel(p.sp_a, p.sp_b, tol) and not is_parallel(
        p.sp_a, p.sp_b, tol
    )


@_prop("parallel", "singular-parallel-family", ("sing1", "sing2", "lam"))
def _(p, tol):
    scaled = Paravector(
        p.sing1.s * p.lam,
        (p.sing1.v[0] * p.lam, p.sing1.v[1] * p.lam, p.sing1.v[2] * p.lam),
    )
    if not is_singularly_parallel(p.sing1, scaled, tol):
        return False
    if not (classify(p.sing1, tol).is_singular and classify(scaled, tol).is_singular):
        return False
    return not is_singularly_parallel(p.sing1, p.sing2, tol)


# -- determinant metric laws ---------------------------------------------------


@_prop("metric", "polarization-identity", ("a", "b"))
def _(p, tol):
    lhs = (p.a + p.b).det()
    rhs = p.a.det() + 2.0 * scalar_product(p.a, p.b) + p.b.det()
    return _close_c(lhs, rhs, tol)


@_prop("metric", "pythagorean", ("perp1", "perp2"))
def _(p, tol):
    lhs = (p.perp1 + p.perp2).det()
    return _close_c(lhs, p.perp1.det() + p.perp2.det(), tol)


@_prop("metric", "parallelogram-law", ("a", "b"))
def _(p, tol):
    lhs = (p.a + p.b).det() + (p.a - p.b).det()
    return _close_c(lhs, 2.0 * p.a.det() + 2.0 * p.b.det(), tol)


# -- angles --------------------------------------------------------------------


@_prop("angle", "angle-det-one", ("proper1", "proper2"))
def _(p, tol):
    for o in (RIGHT, LEFT):
        d = angle(p.proper1, p.proper2, o, tol).value.det()
        if not _close_c(d, 1.0 + 0j, tol):
            return False
    return True


@_prop("angle", "angle-zero-self", ("proper1",))
def _(p, tol):
    return approx_eq(angle(p.proper1, p.proper1, RIGHT, tol).value, ONE, tol)


@_prop("angle", "composition-rows", ("proper1", "proper2"))
def _(p, tol):
    f1 = angle(p.proper1, p.proper2, LEFT, tol)
    f2 = angle(p.proper2, p.proper1, LEFT, tol)
    composed = compose_angles(f1, f2)
    cosi = f1.cosinis * f2.cosinis + vdot(f1.sinis, f2.sinis)
    cr = vcross(f1.sinis, f2.sinis)
    sini = tuple(
        f1.cosinis * f2.sinis[k] + f2.cosinis * f1.sinis[k] + 1j * cr[k]
        for k in range(3)
    )
    return _close_c(composed.cosinis, cosi, tol) and _close_v(composed.sinis, sini, tol)


@_prop("angle", "doubling-rows", ("proper1", "proper2"))
def _(p, tol):
    f = angle(p.proper1, p.proper2, LEFT, tol)
    doubled = compose_angles(f, f)
    cosi = f.cosinis * f.cosinis + vdot(f.sinis, f.sinis)
    sini = tuple(2.0 * f.cosinis * f.sinis[k] for k in range(3))
    return _close_c(doubled.cosinis, cosi, tol) and _close_v(doubled.sinis, sini, tol)


@_prop("angle", "explement-rows", ("proper1", "proper2"))
def _(p, tol):
    f = angle(p.proper1, p.proper2, LEFT, tol)
    e = explement(f)
    return (
        _close_c(e.cosinis, f.cosinis, tol)
        and _close_v(e.sinis, tuple(-z for z in f.sinis), tol)
        and _close_c(e.value.det(), 1.0 + 0j, tol)
    )


@_prop("angle", "explement-swaps-arguments", ("proper1", "proper2"))
def _(p, tol):
    for o in (RIGHT, LEFT):
        e = explement(angle(p.proper1, p.proper2, o, tol))
        if not approx_eq(e.value, angle(p.proper2, p.proper1, o, tol).value, tol):
            return False
    return True


@_prop("angle", "explement-involution", ("proper1", "proper2"))
def _(p, tol):
    f = angle(p.proper1, p.proper2, RIGHT, tol)
    return approx_eq(explement(explement(f)).value, f.value, tol)


@_prop("angle", "compose-identity", ("proper1", "proper2"))
def _(p, tol):
    f = angle(p.proper1, p.proper2, LEFT, tol)
    return approx_eq(
        compose_angles(f, Angle.identity(LEFT)).value, f.value, tol
    )


@_prop("angle", "trigonometric-character", ("w1", "w2"))
def _(p, tol):
    a = Paravector(0j, (1j * p.w1[0], 1j * p.w1[1], 1j * p.w1[2]))
    b = Paravector(0j, (1j * p.w2[0], 1j * p.w2[1], 1j * p.w2[2]))
    f = angle(a, b, RIGHT, tol)
    sc = component_scale(f.value)
    thr = tol.linear(max(1.0, sc))
    if abs(f.cosinis.imag) > thr:
        return False
    if any(abs(z.real) > thr for z in f.dextis):
        return False
    m = tuple(z.imag for z in f.dextis)
    c = f.cosinis.real
    return _close_c(c * c + m[0] ** 2 + m[1] ** 2 + m[2] ** 2, 1.0, tol)


@_prop("angle", "hyperbolic-character", ("hyp1", "hyp2"))
def _(p, tol):
    f = angle(p.hyp1, p.hyp2, RIGHT, tol)
    sc = component_scale(f.value)
    thr = tol.linear(max(1.0, sc * sc))
    if abs(f.cosinis.imag) > thr:
        return False
    if any(abs(z.imag) > thr for z in f.dextis):
        return False
    c = f.cosinis.real
    d = tuple(z.real for z in f.dextis)
    lhs = c * c - (d[0] ** 2 + d[1] ** 2 + d[2] ** 2)
    return abs(lhs - 1.0) <= tol.linear(max(1.0, sc * sc))


# -- rotations -----------------------------------------------------------------


@_prop("rotation", "preserves-det-and-scalar", ("a", "proper1"))
def _(p, tol):
    for o in (LEFT, RIGHT):
        g = rotate(p.a, p.axis1, o)
        if not (_close_c(g.det(), p.a.det(), tol) and _close_c(g.s, p.a.s, tol)):
            return False
    return True


@_prop("rotation", "fixes-spatially-parallel", ("proper1", "tau", "mu"))
def _(p, tol):
    axis_v = p.axis1.value.v
    g = Paravector(p.tau, (axis_v[0] * p.mu, axis_v[1] * p.mu, axis_v[2] * p.mu))
    return approx_eq(rotate(g, p.axis1, LEFT), g, tol) and approx_eq(
        rotate(g, p.axis1, RIGHT), g, tol
    )


@_prop("rotation", "matches-similarity", ("a", "proper1"))
def _(p, tol):
    return approx_eq(
        rotate(p.a, p.axis1, LEFT), similarity(p.a, p.axis1.value, tol), tol
    )


@_prop("rotation", "parallel-axes-same-rotation", ("a", "proper1", "s_real"))
def _(p, tol):
    other = RotationAxis.from_paravector(p.proper1 * p.s_real, tol)
    return approx_eq(rotate(p.a, p.axis1, LEFT), rotate(p.a, other, LEFT), tol)


def _rodrigues(w, n, theta):
    c, s = math.cos(theta), math.sin(theta)
    dot = n[0] * w[0] + n[1] * w[1] + n[2] * w[2]
    cross = (
        n[1] * w[2] - n[2] * w[1],
        n[2] * w[0] - n[0] * w[2],
        n[0] * w[1] - n[1] * w[0],
    )
    return tuple(w[k] * c + cross[k] * s + n[k] * dot * (1.0 - c) for k in range(3))


@_prop("rotation", "vector-matches-rodrigues", ("w1", "rot1"))
def _(p, tol):
    got = rotate_vector(p.w1, p.rot1)
    want = _rodrigues(p.w1, p.rot1.n, 2.0 * p.rot1.phi)
    return _close_v(got, want, tol)


@_prop("rotation", "vector-isometry", ("w1", "rot1"))
def _(p, tol):
    got = rotate_vector(p.w1, p.rot1)
    return _close_c(_vnorm(got), _vnorm(p.w1), tol)


@_prop("rotation", "vector-fixes-axis", ("rot1", "s_real"))
def _(p, tol):
    w = (p.s_real * p.rot1.n[0], p.s_real * p.rot1.n[1], p.s_real * p.rot1.n[2])
    return _close_v(rotate_vector(w, p.rot1), w, tol)


@_prop("rotation", "euler-compose-sequential", ("w1", "rot1", "rot2"))
def _(p, tol):
    sequential = rotate_vector(rotate_vector(p.w1, p.rot1), p.rot2)
    combined = rotate_vector(p.w1, euler_compose(p.rot1, p.rot2, tol))
    return _close_v(sequential, combined, tol)


@_prop("rotation", "angle-decomposition", ("proper1", "proper2"))
def _(p, tol):
    lam = p.axis2.value
    rotated = rotate(p.proper1, p.axis2, LEFT)
    lhs = angle(p.proper1, rotated, RIGHT, tol).value
    rhs = (
        angle(p.proper1, lam, RIGHT, tol).value
        * angle(p.proper1, lam, LEFT, tol).value
    )
    return approx_eq(lhs, rhs, tol)


@_prop("rotation", "similarity-preserves-scalar", ("a", "nonsing1"))
def _(p, tol):
    return _close_c(similarity(p.a, p.nonsing1, tol).s, p.a.s, tol)


@_prop("rotation", "similarity-equivalence", ("a", "nonsing1", "nonsing2"))
def _(p, tol):
    there = similarity(p.a, p.nonsing1, tol)
    back = similarity(there, p.nonsing1.inverse(tol), tol)
    if not approx_eq(back, p.a, tol):
        return False
    two_step = similarity(similarity(p.a, p.nonsing1, tol), p.nonsing2, tol)
    one_step = similarity(p.a, p.nonsing1 * p.nonsing2, tol)
    return approx_eq(two_step, one_step, tol)


# -- mirror and axial symmetry ---------------------------------------------


@_prop("mirror", "mirror-involution", ("a", "om1"))
def _(p, tol):
    return approx_eq(mirror(mirror(p.a, p.om1, tol), p.om1, tol), p.a, tol)


@_prop("mirror", "mirror-flips-scalar", ("a", "om1"))
def _(p, tol):
    return _close_c(mirror(p.a, p.om1, tol).s, -p.a.s, tol)


@_prop("mirror", "mirror-real-formula", ("a", "w1"))
def _(p, tol):
    w = p.w1
    nw = math.sqrt(w[0] ** 2 + w[1] ** 2 + w[2] ** 2)
    n = (w[0] / nw, w[1] / nw, w[2] / nw)
    v = p.a.v
    vn = v[0] * n[0] + v[1] * n[1] + v[2] * n[2]
    nxv = (
        n[1] * v[2] - n[2] * v[1],
        n[2] * v[0] - n[0] * v[2],
        n[0] * v[1] - n[1] * v[0],
    )
    tangent = (
        nxv[1] * n[2] - nxv[2] * n[1],
        nxv[2] * n[0] - nxv[0] * n[2],
        nxv[0] * n[1] - nxv[1] * n[0],
    )
    expected = Paravector(
        -p.a.s,
        (
            -n[0] * vn + tangent[0],
            -n[1] * vn + tangent[1],
            -n[2] * vn + tangent[2],
        ),
    )
    return approx_eq(mirror(p.a, w, tol), expected, tol)


@_prop("mirror", "mirror-composition-is-rotation", ("a", "om1", "om2"))
def _(p, tol):
    sequential = mirror(mirror(p.a, p.om1, tol), p.om2, tol)
    axis = compose_mirrors(p.om1, p.om2, tol)
    return approx_eq(sequential, rotate(p.a, axis, LEFT), tol)


@_prop("mirror", "axial-involution", ("a", "om1"))
def _(p, tol):
    return approx_eq(axial_symmetry(axial_symmetry(p.a, p.om1, tol), p.om1, tol), p.a, tol)


@_prop("mirror", "axial-preserves-scalar", ("a", "om1"))
def _(p, tol):
    return _close_c(axial_symmetry(p.a, p.om1, tol).s, p.a.s, tol)


@_prop("mirror", "axial-is-straight-rotation", ("a", "w1"))
def _(p, tol):
    w = p.w1
    nw = math.sqrt(w[0] ** 2 + w[1] ** 2 + w[2] ** 2)
    axis = RotationAxis(
        Paravector(0j, (1j * w[0] / nw, 1j * w[1] / nw, 1j * w[2] / nw))
    )
    return approx_eq(axial_symmetry(p.a, w, tol), rotate(p.a, axis, LEFT), tol)


@_prop("mirror", "axial-fixes-parallel", ("tau", "om1", "mu"))
def _(p, tol):
    g = Paravector(p.tau, (p.om1[0] * p.mu, p.om1[1] * p.mu, p.om1[2] * p.mu))
    return approx_eq(axial_symmetry(g, p.om1, tol), g, tol)


@_prop("mirror", "axial-real-formula", ("a", "w1"))
def _(p, tol):
    w = p.w1
    nw2 = w[0] ** 2 + w[1] ** 2 + w[2] ** 2
    v = p.a.v
    vw = v[0] * w[0] + v[1] * w[1] + v[2] * w[2]
    expected = Paravector(
        p.a.s,
        (
            2.0 * w[0] * vw / nw2 - v[0],
            2.0 * w[1] * vw / nw2 - v[1],
            2.0 * w[2] * vw / nw2 - v[2],
        ),
    )
    return approx_eq(axial_symmetry(p.a, w, tol), expected, tol)


# -- matrix representations --------------------------------------------------


@_prop("matrix", "mat4-multiplicative", ("a", "b"))
def _(p, tol):
    lhs = matrices.to_matrix4(p.a * p.b)
    rhs = matrices.to_matrix4(p.a) @ matrices.to_matrix4(p.b)
    return lhs.approx_eq(rhs, tol)


@_prop("matrix", "mat4-additive", ("a", "b"))
def _(p, tol):
    lhs = matrices.to_matrix4(p.a + p.b)
    rhs = matrices.to_matrix4(p.a) + matrices.to_matrix4(p.b)
    return lhs.approx_eq(rhs, tol)


@_prop("matrix", "mat4-det-squares", ("a",))
def _(p, tol):
    d = p.a.det()
    return _close_c(matrices.to_matrix4(p.a).det(), d * d, tol)


@_prop("matrix", "mat4-hermitian-conjugation", ("a",))
def _(p, tol):
    lhs = matrices.to_matrix4(p.a.conj())
    return lhs.approx_eq(matrices.to_matrix4(p.a).conj_transpose(), tol)


@_prop("matrix", "mat4-inverse", ("nonsing1",))
def _(p, tol):
    lhs = matrices.to_matrix4(p.nonsing1.inverse(tol))
    return lhs.approx_eq(matrices.to_matrix4(p.nonsing1).inverse(), tol)


@_prop("matrix", "mat4-reversion-pattern", ("a",))
def _(p, tol):
    s = p.a.s
    x, y, z = p.a.v
    expected = matrices.Matrix4(
        (
            (s, -x, -y, -z),
            (-x, s, 1j * z, -1j * y),
            (-y, -1j * z, s, 1j * x),
            (-z, 1j * y, -1j * x, s),
        )
    )
    return matrices.to_matrix4(p.a.rev()).approx_eq(expected, tol)


@_prop("matrix", "mat4-roundtrip", ("a",))
def _(p, tol):
    return approx_eq(matrices.from_matrix4(matrices.to_matrix4(p.a), tol), p.a, tol)


@_prop("matrix", "mat4-singular-iff", ("sing1", "nonsing1"))
def _(p, tol):
    sc = component_scale(p.sing1)
    singular_side = _zero_c(
        matrices.to_matrix4(p.sing1).det(), tol, sc * sc * sc * sc
    )
    nc = component_scale(p.nonsing1)
    nonsingular_side = abs(matrices.to_matrix4(p.nonsing1).det()) > tol.abs + tol.rel * nc**4
    return singular_side and nonsingular_side


@_prop("matrix", "pauli-multiplicative", ("a", "b"))
def _(p, tol):
    lhs = matrices.to_pauli(p.a * p.b)
    return lhs.approx_eq(matrices.to_pauli(p.a) @ matrices.to_pauli(p.b), tol)


@_prop("matrix", "pauli-additive", ("a", "b"))
def _(p, tol):
    lhs = matrices.to_pauli(p.a + p.b)
    return lhs.approx_eq(matrices.to_pauli(p.a) + matrices.to_pauli(p.b), tol)


@_prop("matrix", "pauli-det", ("a",))
def _(p, tol):
    return _close_c(matrices.to_pauli(p.a).det(), p.a.det(), tol)


# -- orthogonal transformations ----------------------------------------------


@_prop("orthogonal", "right-action-preserves-integrated", ("a", "b", "proper2"))
def _(p, tol):
    lam = p.axis2.value
    lhs = integrated(p.a * lam, p.b * lam, RIGHT).value
    if not approx_eq(lhs, integrated(p.a, p.b, RIGHT).value, tol):
        return False
    lhs_left = integrated(lam * p.a, lam * p.b, LEFT).value
    return approx_eq(lhs_left, integrated(p.a, p.b, LEFT).value, tol)


@_prop("orthogonal", "vig-parallel-left-action", ("par1", "par2", "proper1"))
def _(p, tol):
    lam = p.axis1.value
    return is_parallel((lam * p.par1).vig(), (lam * p.par2).vig(), tol)


@_prop("orthogonal", "vig-parallel-right-action", ("par1", "par2", "proper1"))
def _(p, tol):
    lam = p.axis1.value
    return is_parallel((p.par1 * lam).vig(), (p.par2 * lam).vig(), tol)


@_prop("orthogonal", "right-action-star-scalar", ("a", "b", "proper2"))
def _(p, tol):
    lam = p.axis2.value
    a2, b2 = p.a * lam, p.b * lam
    lhs = scalar_product(a2.conj() * a2, b2.conj() * b2)
    rhs = scalar_product(p.a.conj() * p.a, p.b.conj() * p.b)
    return _close_c(lhs, rhs, tol)


@_prop("orthogonal", "left-action-vig-scalar", ("a", "b", "proper2"))
def _(p, tol):
    lam = p.axis2.value
    a2, b2 = lam * p.a, lam * p.b
    lhs = scalar_product(a2.vig(), b2.vig())
    rhs = scalar_product(p.a.vig(), p.b.vig())
    return _close_c(lhs, rhs, tol)


@_prop("orthogonal", "sphere-invariance", ("sphere", "proper1"))
def _(p, tol):
    lam = p.axis1.value
    sc = component_scale(lam, p.sphere)
    quartic = sc * sc * sc * sc
    return _zero_c((lam * p.sphere).det(), tol, quartic) and _zero_c(
        rotate(p.sphere, p.axis1, LEFT).det(), tol, quartic
    )


@_prop("orthogonal", "det-one-detector", ("proper1", "nonsing1"))
def _(p, tol):
    if not is_orthogonal_transform(p.axis1.value, tol):
        return False
    d = p.nonsing1.det()
    if abs(d - 1.0) > 1e-3:
        return not is_orthogonal_transform(p.nonsing1, tol)
    return True


SUITES = tuple(dict.fromkeys(prop.suite for prop in _PROPS))


# ---------------------------------------------------------------------------
# Mutants.
# ---------------------------------------------------------------------------


def _mul_drop_cross(a, b):
    s1, s2 = a.s, b.s
    x1, y1, z1 = a.v
    x2, y2, z2 = b.v
    return Paravector(
        s1 * s2 + x1 * x2 + y1 * y2 + z1 * z2,
        (s2 * x1 + s1 * x2, s2 * y1 + s1 * y2, s2 * z1 + s1 * z2),
    )


def _rev_sign_error(self):
    v = self.v
    return Paravector(-self.s, (-v[0], -v[1], -v[2]))


def _to_matrix4_transposed(g):
    s = g.s
    x, y, z = g.v
    return matrices.Matrix4(
        (
            (s, x, y, z),
            (x, s, 1j * z, -1j * y),
            (y, -1j * z, s, 1j * x),
            (z, 1j * y, -1j * x, s),
        )
    )


MUTANTS = {
    "mul-drop-cross": ((core, "mul", _mul_drop_cross),),
    "rev-sign": ((Paravector, "rev", _rev_sign_error),),
    "matrix-transpose": ((matrices, "to_matrix4", _to_matrix4_transposed),),
}


@contextmanager
def _mutated(name):
    if name is None:
        yield
        return
    try:
        targets = MUTANTS[name]
    except KeyError:
        raise ValueError(
            f"unknown mutant {name!r}; choose from {sorted(MUTANTS)}"
        ) from None
    saved = [(obj, attr, getattr(obj, attr)) for obj, attr, _ in targets]
    for obj, attr, replacement in targets:
        setattr(obj, attr, replacement)
    try:
        yield
    finally:
        for obj, attr, original in saved:
            setattr(obj, attr, original)


# ---------------------------------------------------------------------------
# Reports.
# ---------------------------------------------------------------------------


def _wire_value(x):
    if isinstance(x, Paravector):
        return to_wire(x)
    if isinstance(x, RotationAxis):
        return to_wire(x.value)
    if isinstance(x, Angle):
        return to_wire(x.value)
    if isinstance(x, SpatialRotation):
        return [x.n[0], x.n[1], x.n[2], x.phi]
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (int, float)):
        return float(x)
    if isinstance(x, (tuple, list)):
        zs = [complex(z) for z in x]
        return [z.real for z in zs] + [z.imag for z in zs]
    return str(x)


@dataclass
class PropertyResult:
    name: str
    passes: int
    fails: int
    counterexample: dict | None

    def to_dict(self):
        return {
            "name": self.name,
            "passes": self.passes,
            "fails": self.fails,
            "counterexample": self.counterexample,
        }


@dataclass
class FuzzReport:
    seed: int
    trials: int
    tol: object
    mutant: str | None
    properties: list

    @property
    def failed_properties(self):
        return sum(1 for r in self.properties if r.fails)

    @property
    def total_failures(self):
        return sum(r.fails for r in self.properties)

    def suite_failures(self, suites):
        wanted = set(suites)
        return sum(
            r.fails for r in self.properties if r.name.split("/", 1)[0] in wanted
        )

    def to_dict(self):
        return {
            "seed": self.seed,
            "trials": self.trials,
            "tol": {"abs": self.tol.abs, "rel": self.tol.rel},
            "mutant": self.mutant,
            "properties": [r.to_dict() for r in self.properties],
            "failed_properties": self.failed_properties,
            "total_failures": self.total_failures,
        }

    def format_text(self):
        lines = [
            f"fuzz report: seed={self.seed} trials={self.trials} "
            f"tol={self.tol.abs:g}/{self.tol.rel:g}"
            + (f" mutant={self.mutant}" if self.mutant else "")
        ]
        for r in self.properties:
            status = "ok  " if r.fails == 0 else "FAIL"
            line = f"  {status} {r.name:<44} passes={r.passes} fails={r.fails}"
            if r.counterexample is not None:
                line += f" first-failure-trial={r.counterexample['trial']}"
            lines.append(line)
        if self.failed_properties:
            lines.append(f"{self.failed_properties} properties failed")
        else:
            lines.append(f"all {len(self.properties)} properties passed")
        return "\n".join(lines)


def run_fuzz(seed=42, trials=10000, tol=DEFAULT_TOL, mutant=None, suites=None):
    """Run every registered property over deterministic trials.

    ``suites`` restricts the run to the named suites; ``mutant`` installs
    one of the documented defects for the duration of the run.  The
    report is a pure function of the arguments.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if suites is not None:
        unknown = set(suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        props = [p for p in _PROPS if p.suite in set(suites)]
    else:
        props = list(_PROPS)
    passes = [0] * len(props)
    fails = [0] * len(props)
    counterexamples = [None] * len(props)
    with _mutated(mutant):
        for i in range(trials):
            pack = make_pack(seed, i)
            for j, prop in enumerate(props):
                try:
                    ok = bool(prop.check(pack, tol))
                    error = None
                except Exception as exc:
                    ok = False
                    error = repr(exc)
                if ok:
                    passes[j] += 1
                else:
                    fails[j] += 1
                    if counterexamples[j] is None:
                        inputs = {}
                        for name in prop.inputs:
                            try:
                                inputs[name] = _wire_value(getattr(pack, name))
                            except Exception as exc:
                                inputs[name] = f"<unavailable: {exc!r}>"
                        ce = {"trial": i, "inputs": inputs}
                        if error is not None:
                            ce["error"] = error
                        counterexamples[j] = ce
    results = [
        PropertyResult(prop.full_name, passes[j], fails[j], counterexamples[j])
        for j, prop in enumerate(props)
    ]
    return FuzzReport(seed, trials, tol, mutant, results)
