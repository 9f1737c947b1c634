"""
Pairings and perfectness
========================

Pairing an OrdI map with an OrdT map gives an interval map. The point is a
zero for the pairing, and pairing with identities separates maps.
"""

from finord import adjoin_bottom_t, identity, pair_it, parse_map
from finord.algebra import sigma_pair
from finord.laws import enumerate_coalgebras, separation_witness

x, y = parse_map("2->2:[0 0]"), parse_map("2->2:[1 1]")
print("x | y =", pair_it(x, y))

pt = identity(1)
print("pt | y == iT(y):", pair_it(pt, y) == adjoin_bottom_t(y))
print("pt <> y == y:", sigma_pair(pt, y) == y)

f, g = parse_map("2->2:[0 1]"), parse_map("2->2:[1 1]")
print("smallest separating object for", f, "and", g, ":", separation_witness(f, g))

# only carriers of size >= 2 carry a coalgebra of the comonad, and exactly one
print([len(enumerate_coalgebras(p)) for p in range(1, 6)])
