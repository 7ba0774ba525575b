"""Orders and reduced regions are two views of one object.

Forward: an order's region has finitely many integer points, each one a
maximal order.  Backward: intersecting those maximal orders means taking
entrywise maxima of their exponent matrices.  For a reduced matrix the
round trip is the identity.
"""

from splitorders import (
    ApartmentVertex,
    ExponentMatrix,
    intersect_maximal,
    maximal_order_exponents,
    maximal_orders_containing,
    verify_roundtrip,
)

nu = ExponentMatrix([[0, 0, 1], [3, 0, 1], [3, 2, 0]])

vertices = maximal_orders_containing(nu)
print(f"{len(vertices)} maximal orders contain S(nu)")

v = ApartmentVertex([0, 0, -1])
print("\none of them, Lambda(0,0,-1):")
for row in maximal_order_exponents(v).entries:
    print(" ", row)

# three vertices already suffice to cut nu out
corners = [ApartmentVertex([0, 0, -1]), ApartmentVertex([0, 3, 2]), ApartmentVertex([0, 1, 3])]
print("\nintersection of three corners == nu:", intersect_maximal(corners) == nu)

report = verify_roundtrip(nu)
print("\nround trip report:")
print("  input reduced: ", report.input_reduced)
print("  hull fixed:    ", report.hull_fixed)
print("  reduced fixed: ", report.reduced_fixed)
print("  ok:            ", report.ok)

# a non-reduced input still round-trips onto its hull
nu_prime = ExponentMatrix([[0, 0, 2], [3, 0, 1], [3, 2, 0]])
report = verify_roundtrip(nu_prime)
print("\nnu' is not reduced; its vertices intersect to the hull:")
print("  intersection == order_hull(nu'):", intersect_maximal(list(report.vertices)) == report.hull)
