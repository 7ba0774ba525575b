"""Exponent matrices: the order criterion and the order hull.

A split order is the set of matrices whose (i, j) entry has p-adic
valuation at least nu[i][j].  Such a set is closed under multiplication
exactly when nu satisfies the triangle inequalities
nu[i][k] + nu[k][j] >= nu[i][j].
"""

from splitorders import (
    ExponentMatrix,
    first_violation,
    has_containing_maximal,
    hijikata_normal_form,
    is_order,
    order_hull,
)

nu = ExponentMatrix([[0, 0, 1], [3, 0, 1], [3, 2, 0]])
print("nu =", nu.entries)
print("is_order:", is_order(nu))

# raise one exponent and multiplicativity breaks
nu_prime = ExponentMatrix([[0, 0, 2], [3, 0, 1], [3, 2, 0]])
print("\nnu' =", nu_prime.entries)
print("is_order:", is_order(nu_prime))
i, k, j = first_violation(nu_prime)
print(f"violated triple: nu[{i}][{k}] + nu[{k}][{j}] < nu[{i}][{j}]")

# the hull is the largest order inside the declared set, found by
# min-plus path relaxation; for nu' it recovers nu
hull = order_hull(nu_prime)
print("order_hull(nu') == nu:", hull == nu)

# a negative cycle means no maximal order contains the set at all
bad = ExponentMatrix([[0, -2], [1, 0]])
print("\nfeasible([[0,-2],[1,0]]):", has_containing_maximal(bad))

# at n = 2 an order is classified by one number, its level
two = ExponentMatrix([[0, 0], [3, 0]])
print("level of [[0,0],[3,0]]:", hijikata_normal_form(two))
