"""Split orders that live in a conjugated frame.

An invertible gamma carries the standard frame to another apartment.
A pair (gamma, nu) then describes the conjugated intersection of
maximal orders; membership is checked by pulling matrices back to the
standard frame.  Lattice incidence is likewise invariant: elementary
divisors do not notice the change of frame.
"""

import random

from splitorders import (
    Apartment,
    ApartmentVertex,
    LocalMatrix,
    divisor_invariance_check,
    elementary_divisors,
    general_membership,
    incident,
    incident_lattices,
    intersect_in_apartment,
    lattice_basis,
    sample_split_order_element,
)

p = 2
gamma = LocalMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]], p)
ap = Apartment(gamma)
print("standard frame:", ap.is_standard())

family = [ApartmentVertex([0, 1, 0]), ApartmentVertex([0, 2, 1]), ApartmentVertex([0, 0, -1])]
S = intersect_in_apartment(ap, family)
print("exponents of the intersection:", S.nu.entries)

rng = random.Random(1)
member = ap.from_standard(sample_split_order_element(S.nu, rng, p))
print("transported sharp element belongs:", general_membership(S, member))

outsider = ap.from_standard(LocalMatrix.matrix_unit(3, 0, 1, p, exponent=-4))
print("transported outsider belongs:", general_membership(S, outsider))

# incidence of building vertices, two ways
u = ApartmentVertex([0, 0, 0])
v = ApartmentVertex([0, 1, 1])
print("\nincident(u, v):", incident(u, v))
Lu, Lv = lattice_basis(u, p), lattice_basis(v, p)
print("via elementary divisors:", incident_lattices(Lu, Lv))
print("divisors:", elementary_divisors(Lu, Lv))
print("stable under gamma:", divisor_invariance_check(gamma, Lu, Lv))
