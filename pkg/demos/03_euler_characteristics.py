"""
Euler characteristics
=====================

chi(X) is the least number of points fixed by an element of Dis(X).
The search stops as soon as a fixed-point-free element turns up.
"""

from quandle_euler import (
    cycle_graph_spec,
    cycle_quandle,
    dihedral,
    discrete_sphere,
    euler_characteristic,
    euler_graph_fast,
    euler_with_search,
    path_quandle,
    trivial,
)

for n in range(1, 7):
    r = euler_characteristic(discrete_sphere(n))
    print(f"DS^{n}: chi = {r.value}  witness fixes {r.witness.fixed_point_count()} points"
          f"  (explored {r.explored} elements)")

print()
for n in range(2, 8):
    print(f"C_{n}: chi = {euler_characteristic(cycle_quandle(n)).value}",
          f"  B_{n}: chi = {euler_characteristic(path_quandle(n)).value}")

print("\ntrivial(5):", euler_characteristic(trivial(5)).value)
print("R_9       :", euler_characteristic(dihedral(9)).value)

# without early exit the whole group is walked and its order comes back too
full = euler_characteristic(discrete_sphere(4), early_exit=False)
print("\nDS^4 full walk:", full.to_json())

# weighted graphs have a shortcut working on vectors in A^n;
# for C_15 that is 2^14 vectors instead of permutations of 30 points
fast = euler_graph_fast(cycle_graph_spec(15))
print("C_15 via the vector shortcut:", fast.value)

# a tiny cap cuts the enumeration short; the answer is then only a bound
capped = euler_characteristic(discrete_sphere(6), cap=4)
print("\nDS^6 with cap 4:", capped.exact, "upper bound", capped.upper_bound)

# random words can still certify chi = 0 past the cap
found = euler_with_search(dihedral(11), cap=1, trials=200, seed=3)
print("R_11 with cap 1 and a random search:", found.value, found.exact)
