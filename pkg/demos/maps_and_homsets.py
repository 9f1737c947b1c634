"""
Monotone maps and hom-sets
==========================

Objects are sizes, maps are weakly increasing value tuples.
"""

from finord import Tag, compose, enumerate_hom, hom_count, hom_poset, parse_map

# a map literal names its source, target and values
f = parse_map("3->2:[0 0 1]")
g = parse_map("2->4:[1 3]")
print(f, "then", g, "is", compose(f, g))

# the four categories share maps and differ by which endpoints are kept
for tag in Tag:
    print(f"{tag:>5}: |Hom(3, 3)| = {hom_count(3, 3, tag)}")

# maps into the two-element order form a chain, one per cut
for h in hom_poset(3, 2).sorted_chain():
    print("  ", h)

# stars and bars: Hom_Ord(m, n) has C(m+n-1, m) elements
print([len(enumerate_hom(m, 3)) for m in range(6)])
