"""
Small posets and their shapes
=============================

Build a few posets by their cover relations, ask structural questions, and
enumerate all posets of a given size up to isomorphism.
"""

from posetdual import Poset, canonical_key, chain, direct_sum, generate_posets

# elements are 0..n-1; a pair (i, j) means j covers i
V = Poset(3, [(2, 0), (2, 1)])    # one bottom, two tops
LAM = Poset(3, [(0, 2), (1, 2)])  # two bottoms, one top
N = Poset(4, [(0, 2), (1, 2), (1, 3)])

for name, P in [("V", V), ("Lambda", LAM), ("N", N), ("C2+C2", direct_sum(chain(2), chain(2)))]:
    print(
        f"{name:7s} connected={P.is_connected()!s:5s} rooted={P.is_rooted()!s:5s} "
        f"co-rooted={P.is_co_rooted()!s:5s} sum-of-chains={P.is_sum_of_chains()}"
    )

# redundant covers are absorbed into the transitive reduction
print(Poset(3, [(0, 1), (1, 2), (0, 2)]).covers)

# relabeling does not change the canonical key
print(canonical_key(V) == canonical_key(Poset(3, [(0, 1), (0, 2)])))

for n in range(1, 6):
    print(n, len(generate_posets(n)))
