"""
Alexander duals through minimal covers
======================================

The dual of a squarefree ideal is generated by the minimal sets of variables
meeting every generator. For L(P, [n]) the dual is L([n], P) with its indices
switched, but for other pairs it can fail.
"""

from posetdual import Poset, alexander_dual, antichain, build_L, chain
from posetdual import duality_holds_computed, ideal_height, minimal_covers, tau

P = antichain(2)
print(alexander_dual(build_L(P, chain(2))) == tau(build_L(chain(2), P)))

V = Poset(3, [(2, 0), (2, 1)])
LAM = Poset(3, [(0, 2), (1, 2)])
L = build_L(V, LAM)
covers = minimal_covers(L)
print("height", ideal_height(L), "cover sizes", sorted(len(c) for c in covers))
print("a minimal cover with 4 cells:", [c for c in covers if len(c) == 4][0])
print("duality holds for (V, Lambda)?", duality_holds_computed(V, LAM))
print("duality holds for (V, V)?", duality_holds_computed(V, V))
