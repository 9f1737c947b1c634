"""
Ordinal sum and interval join
=============================

Ordinal sum stacks orders. Interval join stacks intervals sharing an
endpoint, and acts on max-preserving and min-preserving maps.
"""

from finord import glue, identity, join_it_map, osum, osum2_map, parse_map
from finord.algebra import sigma_act_i, sigma_act_t

a, b = parse_map("1->2:[1]"), parse_map("2->1:[0 0]")
print("a + b =", osum2_map(a, b))

fib = osum([2, 0, 3])
print("projection of 2 + 0 + 3:", fib.projection)

# the join comes from ordinal sum through the Birkhoff duality; that reverses
# the blocks, so the second argument ends up below
j, k = parse_map("3->2:[0 0 1]"), parse_map("2->3:[0 2]")
print("join(j, k) =", join_it_map(j, k), "== glue(k, j):", join_it_map(j, k) == glue(k, j))
print("unit:", join_it_map(identity(1), j) == j)

x = parse_map("2->2:[1 1]")
print("j acting on an OrdT map from the left: ", sigma_act_t(j, x))
print("j acting on an OrdI map from the right:", sigma_act_i(parse_map("2->2:[0 0]"), j))
