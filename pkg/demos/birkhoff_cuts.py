"""
Cuts and the Birkhoff duality
=============================

Every map of plain finite orders becomes an interval map between the
orders of its cuts, and back.
"""

from finord import birkhoff_it, birkhoff_ord, bracket, enumerate_hom, op_map, parse_map

f = parse_map("1->2:[1]")
print("f           =", f)
print("[f]         =", bracket(f))
print("B f         =", birkhoff_ord(f))
print("op [f]      =", op_map(bracket(f)))
print("B-inv B f   =", birkhoff_it(birkhoff_ord(f)))

# the duality is a bijection of hom-sets: Hom_Ord(m, n) ~ Hom_OrdIt(n+1, m+1)
m, n = 2, 3
images = {birkhoff_ord(h) for h in enumerate_hom(m, n)}
print(len(images), "distinct interval maps from", len(enumerate_hom(m, n)), "maps")
