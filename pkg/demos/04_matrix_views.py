"""The 4x4 and Pauli matrix views and why they make a good oracle."""

from paravec import Paravector, format_matrix, from_matrix4, to_matrix4, to_pauli

g = Paravector(1 + 1j, (1, 0, 2j))
h = Paravector(0.5, (0, 1j, 1))

print("Every paravector embeds into a 4x4 complex matrix whose first row")
print("lists its four complex components:")
print(format_matrix(to_matrix4(g).rows))

print("\nThe embedding is a ring homomorphism - the matrix of a product is")
print("the product of the matrices:")
lhs = to_matrix4(g * h)
rhs = to_matrix4(g) @ to_matrix4(h)
print(f"  max entry difference: "
      f"{max(abs(a - b) for ra, rb in zip(lhs.rows, rhs.rows) for a, b in zip(ra, rb)):.3g}")

print("\nThe 4x4 determinant (computed here by an LU elimination that never")
print("touches the paravector code) is the square of the paravector one:")
print(f"  det4 = {to_matrix4(g).det():.6g}")
print(f"  det^2 = {g.det() ** 2:.6g}")

print("\nConjugation corresponds to the Hermitian conjugate, inversion to")
print("the matrix inverse, and the embedding round-trips exactly:")
print(f"  hermitian match: "
      f"{to_matrix4(g.conj()) == to_matrix4(g).conj_transpose()}")
print(f"  round trip:      {from_matrix4(to_matrix4(g)) == g}")

print("\nThe 2x2 sigma-basis view does the same with determinant preserved")
print("as-is instead of squared:")
print(format_matrix(to_pauli(g).rows))
print(f"  det2 = {to_pauli(g).det():.6g}   (det = {g.det():.6g})")
