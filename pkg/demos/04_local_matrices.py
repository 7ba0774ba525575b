"""Exact matrices over Q with a p-adic valuation.

Everything downstream of the exponent calculus can be checked against
honest matrix arithmetic: membership, conjugation, triangular normal
forms, elementary divisors, and randomized ring-closure trials.
"""

import random

from splitorders import (
    ExponentMatrix,
    LocalMatrix,
    conjugate,
    diagonal_witness,
    elementary_divisors,
    hermite_normal_form,
    in_split_order,
    ring_closure_check,
    sample_split_order_element,
)

p = 2

# membership is a valuation bound per entry
nu = ExponentMatrix([[0, 0, 1], [3, 0, 1], [3, 2, 0]])
A = LocalMatrix([[1, 1, 2], [8, 3, 2], [8, 4, 1]], p)
print("A in S(nu):", in_split_order(A, nu))
print("A/2 in S(nu):", in_split_order(A.scale("1/2"), nu))

# conjugation by a non-diagonal triangular matrix moves diag(1, 0)
# outside the integral matrices
xi = LocalMatrix([[1, 1], [0, p]], p)
D = LocalMatrix.diagonal([1, 0], p)
moved = conjugate(xi.inverse(), D)
print("\nxi diag(1,0) xi^-1 =", moved.fractions())
print("integral:", moved.is_integral())

# the triangular normal form is a canonical coset representative:
# any unit left factor washes out
form, transform = hermite_normal_form(LocalMatrix([[3, 5], [2, 4]], p))
print("\nnormal form:", form.matrix.fractions(), "exponents:", form.exponents)
print("transform is a unit:", transform.is_integral() and transform.det() != 0)
witness = diagonal_witness(form) if not form.is_diagonal() else None
if witness is not None:
    print("0/1 diagonal with non-integral conjugate:", witness.fractions())

# elementary divisors compare two lattices given by column bases
L = LocalMatrix.identity(2, p)
Lp = LocalMatrix.diagonal([1, p], p)
print("\ndivisor exponents of p-index-one sublattice:", elementary_divisors(L, Lp))

# sampled sharp-valuation products stay inside an order
rng = random.Random(0)
B = sample_split_order_element(nu, rng, p)
print("\nsharp sample valuations:", B.valuation_matrix())
print("closure check on nu:", ring_closure_check(nu, trials=200, seed=0, prime=p))

nu_prime = ExponentMatrix([[0, 0, 2], [3, 0, 1], [3, 2, 0]])
A, B = ring_closure_check(nu_prime, trials=200, seed=0, prime=p)
print("closure check on nu' found witnesses with product outside:")
print("  A =", A.fractions())
print("  B =", B.fractions())
print("  A @ B in S(nu'):", in_split_order(A @ B, nu_prime))
