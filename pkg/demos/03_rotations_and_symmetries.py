"""Rotations, the axis-angle correspondence, mirrors, and axial symmetry."""

import math

from paravec import (
    Orientation,
    Paravector,
    RotationAxis,
    SpatialRotation,
    axial_symmetry,
    compose_mirrors,
    euler_compose,
    mirror,
    rotate,
    rotate_vector,
    similarity,
    spatial_axis,
)

L = Orientation.LEFT

print("A rotation conjugates by a determinant-one axis: rev(L) * g * L.")
axis = RotationAxis.from_paravector(Paravector(2, (1, 1j, 0)))
g = Paravector(1 + 1j, (0.5, 2, -1j))
rotated = rotate(g, axis, L)
print(f"  g        = {g}")
print(f"  rotated  = {rotated}")
print(f"  scalar and determinant survive: s={rotated.s:.4g}, "
      f"det={rotated.det():.4g} (was {g.det():.4g})")

print("\nAxes of the form {cos(phi) | i n sin(phi)} are ordinary spatial")
print("rotations by 2*phi about the unit vector n:")
rot = SpatialRotation((0, 0, 1), math.pi / 4)
print(f"  axis paravector = {spatial_axis(rot).value}")
print(f"  (1,0,0) -> {rotate_vector((1, 0, 0), rot)}   (90 degrees about z)")

print("\nComposition multiplies the axis paravectors (half angles!):")
r1 = SpatialRotation((1, 0, 0), math.pi / 2)
r2 = SpatialRotation((0, 1, 0), math.pi / 2)
combo = euler_compose(r1, r2)
print(f"  r1 then r2 = axis {tuple(round(c, 6) for c in combo.n)}, "
      f"phi = {combo.phi:.6g}")
w = (0.3, -1.2, 0.7)
print(f"  sequential: {rotate_vector(rotate_vector(w, r1), r2)}")
print(f"  combined:   {rotate_vector(w, combo)}")

print("\nMirror symmetry sandwiches with a vectorial paravector and flips")
print("the scalar sign, so it is not a similarity:")
v = Paravector(1, (1j, 2j, 3j))
print(f"  v                = {v}")
print(f"  mirrored in z    = {mirror(v, (0, 0, 1j))}")
print(f"  similarity keeps the scalar: "
      f"{similarity(v, Paravector(2, (1, 0, 0))).s:.4g}")

print("\nTwo mirrors compose to a rotation; the axis comes out in closed form:")
axis12 = compose_mirrors((1, 0, 0), (0, 1, 0))
print(f"  mirrors in x then y = rotation with axis {axis12.value}")
seq = mirror(mirror(v, (1, 0, 0)), (0, 1, 0))
print(f"  sequential mirrors: {seq}")
print(f"  single rotation:    {rotate(v, axis12, L)}")

print("\nAxial symmetry is the straight-angle rotation about a vector:")
u = Paravector(5, (1, 2, 3))
print(f"  {u} about z -> {axial_symmetry(u, (0, 0, 1))}")
print(f"  applying it twice returns the original: "
      f"{axial_symmetry(axial_symmetry(u, (0, 0, 1)), (0, 0, 1))}")
