"""
Isotone maps and the ideal L(P,Q)
=================================

Every order-preserving map phi: P -> Q gives a squarefree monomial with one
variable x_{p,phi(p)} per element of P. Cells (p, q) stand for the variables.
"""

from posetdual import Poset, antichain, build_L, chain, enumerate_hom, tau

V = Poset(3, [(2, 0), (2, 1)])
LAM = Poset(3, [(0, 2), (1, 2)])

maps = enumerate_hom(V, LAM)
print(len(maps), "isotone maps V -> Lambda")
for phi in maps[:3]:
    print(phi.image)

L = build_L(chain(2), chain(2))
print("L(C2, C2):", L.gens)
print("switched :", tau(L).gens)

# generators of L(P, C2) correspond to order ideals of P
print(len(build_L(antichain(2), chain(2))), "order ideals of the 2-antichain")
