"""
Products and free unions
========================

chi is multiplicative on direct products. On free unions it can only
drop below the sum, and two copies of C_3 show it really can.
"""

import itertools

from quandle_euler import (
    cycle_quandle,
    dihedral,
    direct_product,
    discrete_sphere,
    discrete_torus,
    euler_characteristic,
    free_union,
    group_order,
    trivial,
)


def chi(X):
    return euler_characteristic(X).value


samples = {"T2": trivial(2), "R3": dihedral(3), "DS2": discrete_sphere(2), "C3": cycle_quandle(3)}

print(f"{'X':<5}{'Y':<5}{'chi X':>6}{'chi Y':>6}{'X x Y':>7}{'X u Y':>7}")
for (a, X), (b, Y) in itertools.product(samples.items(), repeat=2):
    print(f"{a:<5}{b:<5}{chi(X):>6}{chi(Y):>6}{chi(direct_product(X, Y)):>7}{chi(free_union(X, Y)):>7}")

C3 = cycle_quandle(3)
U = free_union(C3, C3)
print("\nchi(C3) + chi(C3) =", 2 * chi(C3), " but chi(C3 u C3) =", chi(U))
print("|Dis(C3 u C3)| =", group_order(U))

# a discrete torus is a product of dihedral quandles
for m in ([3, 3], [3, 5], [2, 2]):
    print(f"DT{m}: size {discrete_torus(m).size}, chi {chi(discrete_torus(m))}")
