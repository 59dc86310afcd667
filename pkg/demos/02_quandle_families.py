"""
A tour of the built-in quandle families
=======================================

A quandle table stores s_x(y) at table[x][y]. Every builder checks the
three axioms before handing the quandle back.
"""

from quandle_euler import (
    core,
    cycle_quandle,
    cyclic,
    dihedral,
    discrete_sphere,
    galex,
    group_order,
    is_connected,
    is_homogeneous,
    is_trivial,
    path_quandle,
    symmetric_group,
    trivial,
)

# R_5: reflections of a pentagon's vertices, s_a(b) = 2a - b mod 5
R5 = dihedral(5)
print(R5.table)

# the sphere DS^2 is the six points +-e_i of R^3
DS2 = discrete_sphere(2)
print("\nDS^2 labels:", DS2.labels)
print("s at +e1 sends -e2 to", DS2.label(DS2.s(0, 3)))

families = {
    "trivial(3)": trivial(3),
    "R_5": R5,
    "R_6": dihedral(6),
    "GAlex(Z/5, a -> 2a)": galex(cyclic(5), [0, 2, 4, 1, 3]),
    "Core(S_3)": core(symmetric_group(3)),
    "DS^2": DS2,
    "C_3": cycle_quandle(3),
    "B_3": path_quandle(3),
}

print(f"\n{'quandle':<22}{'size':>5}{'trivial':>9}{'conn':>6}{'homog':>7}{'|Inn|':>7}{'|Dis|':>7}")
for name, X in families.items():
    print(f"{name:<22}{X.size:>5}{str(is_trivial(X)):>9}{str(is_connected(X)):>6}"
          f"{str(is_homogeneous(X)):>7}{group_order(X, 'inner'):>7}{group_order(X):>7}")

# R_6 splits into evens and odds, yet any point can still be moved to any
# other by some automorphism (a translation), so it is homogeneous
