"""Tour of the basic algebra: values, products, involutions, determinants.

Run with the package installed (``pip install -e .``) or with
``PYTHONPATH=src`` from the repository root.
"""

from paravec import ONE, Paravector, classify

print("A paravector pairs a complex scalar with a complex 3-vector.")
g = Paravector(1 + 2j, (1, 0.5j, -1))
h = Paravector(0.5, (0, 1, 1j))
print(f"  g = {g}")
print(f"  h = {h}")

print("\nAddition is componentwise; multiplication is not commutative:")
print(f"  g + h = {g + h}")
print(f"  g * h = {g * h}")
print(f"  h * g = {h * g}")

print("\nPlain numbers embed as scalar paravectors:")
print(f"  2j * g = {2j * g}")

print("\nReversion flips the vector part, conjugation conjugates everything:")
print(f"  g.rev()  = {g.rev()}")
print(f"  g.conj() = {g.conj()}")
print(f"  (g*h).rev() == h.rev()*g.rev(): {(g * h).rev() == h.rev() * g.rev()}")

print("\nThe product with the own reversion is a pure complex number,")
print("the determinant; with the own conjugate it is the real vigor:")
print(f"  det g = {g.det():.6g}")
print(f"  vig g = {g.vig()}")

print("\nNon-singular paravectors invert; the inverse is rev/det:")
inv = g.inverse()
print(f"  g**-1 = {inv}")
print(f"  g * g**-1 = {g * inv}")

print("\nProper paravectors (real positive determinant) have a module and")
print("normalize to determinant one:")
p = Paravector(2, (1, 0, 0))
print(f"  p = {p},  det p = {p.det():.6g},  |p| = {p.module():.6g}")
n = p.normalize()
print(f"  p normalized = {n},  det = {n.det():.6g}")
print(f"  for the normalized value, rev == inverse: "
      f"{n.rev().approx_eq(n.inverse())}")

print("\nThe classifier sums it all up:")
for sample in (p, Paravector(1, (1, 0, 0)), Paravector(0.8, (0, 0, 0.6j)), ONE):
    c = classify(sample)
    flags = [
        name
        for name, on in [
            ("proper", c.is_proper),
            ("singular", c.is_singular),
            ("orthogonal", c.is_orthogonal),
            ("special", c.is_special),
            ("unitar", c.is_unitar),
        ]
        if on
    ]
    print(f"  {str(sample):34} det={c.det:<12.4g} {' '.join(flags) or '-'}")
