"""The region cut out by an exponent matrix.

The same matrix nu that describes a split order also cuts out a compact
region in the coordinates (x_1, ..., x_n), x_1 = 0: the difference
constraints x_i - x_j <= nu[i][j].  Integer points of that region are
the maximal orders containing the split order.
"""

from splitorders import (
    ExponentMatrix,
    enumerate_lattice_points,
    is_reduced,
    max_difference,
    polytope_of,
)

nu = ExponentMatrix([[0, 0, 1], [3, 0, 1], [3, 2, 0]])
P = polytope_of(nu)

print("bounds on x_2:      ", P.difference_range(1, 0))
print("bounds on x_3:      ", P.difference_range(2, 0))
print("bounds on x_3 - x_2:", P.difference_range(2, 1))

points = enumerate_lattice_points(P)
print(f"\n{len(points)} integer points:")
for p in points:
    print(" ", p.coords)

# the sharpest achievable difference is a shortest-path value, not the
# declared entry; for a reduced matrix the two always agree
print("\nmax of x_2 over the region:", max_difference(P, 1, 0))
print("is_reduced(nu):", is_reduced(nu))

nu_prime = ExponentMatrix([[0, 0, 2], [3, 0, 1], [3, 2, 0]])
Q = polytope_of(nu_prime)
print("\nnu' declares x_3 >= -2 but the region stops at -1:")
print("max of x_1 - x_3:", max_difference(Q, 0, 2), "(declared:", nu_prime.entries[0][2], ")")
print("is_reduced(nu'):", is_reduced(nu_prime))
print("same points as nu:", [p.coords for p in enumerate_lattice_points(Q)] == [p.coords for p in points])
