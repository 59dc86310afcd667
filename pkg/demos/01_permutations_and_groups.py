"""
Permutations and small groups
=============================

Permutations are stored as image tuples: p(i) = p.images[i].
Products compose right to left, the same way cycle strings are read.
"""

from quandle_euler import (
    cyclic,
    direct_product_group,
    parse_cycles,
    symmetric_group,
    validate_automorphism,
)

# a 3-cycle and a transposition on {0, 1, 2, 3}
r = parse_cycles("(0 1 2)", 4)
t = parse_cycles("(0 3)", 4)
print("r      =", r.cycle_string(), r.to_list())
print("t      =", t.cycle_string(), t.to_list())

# r * t applies t first
rt = r * t
print("r * t  =", rt.cycle_string(), "cycle type", rt.cycle_type())
print("fixed points of r:", r.fixed_points())

# groups are Cayley tables held in numpy arrays
S3 = symmetric_group(3)
print("\n|S_3| =", S3.order, " abelian:", S3.is_abelian())
print([S3.element_order(g) for g in range(S3.order)])

V4 = direct_product_group(cyclic(2), cyclic(2))
print("Klein four-group table:")
print(V4.mult)

# swapping the two coordinates of Z/2 x Z/2 is an automorphism;
# (a, b) lives at index 2a + b
swap = [0, 2, 1, 3]
print("swap is an automorphism:", validate_automorphism(V4, swap))
print("a -> a + 1 on Z/3 is one:", validate_automorphism(cyclic(3), [1, 2, 0]))
