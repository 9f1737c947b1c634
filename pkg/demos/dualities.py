"""
Adjoints and self-dualities
===========================

A max-preserving map has a left adjoint, a min-preserving one a right adjoint.
Reversing the order of the adjoint gives the self-duality of each category.
"""

from finord import dual_i, dual_t, lad, op_map, parse_map, rad

f = parse_map("3->2:[0 1 1]")
left = lad(f)
print("f      =", f)
print("lad f  =", left)
print("rad of that gives f back:", rad(left) == f)

# the duality is op of the adjoint, and applying it twice is the identity
print("dualT f =", dual_t(f), "== op(lad f):", dual_t(f) == op_map(left))
print("dualT dualT f == f:", dual_t(dual_t(f)) == f)

g = parse_map("2->3:[0 1]")
print("dualI g =", dual_i(g), "== op(rad g):", dual_i(g) == op_map(rad(g)))
