"""Minimal primes and Alexander duals of squarefree monomial ideals.

The minimal primes of a squarefree ideal are generated by the minimal
vertex covers (minimal transversals) of its generator-support hypergraph,
and the Alexander dual is generated by the monomials of those covers.
Transversals are built incrementally, one generator at a time.
"""

from __future__ import annotations

from .errors import CapExceeded
from .homset import HOM_CAP, IsotoneMap, enumerate_hom
from .ideal import Cell, Ideal, build_L, tau
from .poset import Poset

#: Default bound on the number of transversals held during dualization.
COVER_CAP = 10**5

PrimeCover = tuple[Cell, ...]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def minimal_transversals(edges, cap: int | None = COVER_CAP) -> list[int]:
    """Minimal hitting sets of a family of bitmask edges, as bitmasks.

    Each new edge keeps the transversals it already meets and extends the
    others by one vertex of the edge. An extension ``t | b`` is minimal
    unless it contains a kept transversal, and such a transversal meets the
    edge only in ``b``; so only kept transversals through ``b`` are compared.
    """
    edges = sorted(set(edges), key=lambda m: (m.bit_count(), m))
    if not edges:
        raise ValueError("need at least one generator")
    if 0 in edges:
        # the unit ideal has no proper prime over it
        return []
    trans = [0]
    for e in edges:
        hit = [t for t in trans if t & e]
        miss = [t for t in trans if not t & e]
        if not miss:
            continue
        kept = list(hit)
        for b in _bits(e):
            through = [h for h in hit if h & b]
            for t in miss:
                c = t | b
                if not any(h & c == h for h in through):
                    kept.append(c)
        trans = kept
        if cap is not None and len(trans) > cap:
            raise CapExceeded("minimal covers", cap, len(trans))
    return sorted(trans)


def minimal_covers(I: Ideal, cap: int | None = COVER_CAP) -> list[PrimeCover]:
    """Minimal primes of ``I`` as sorted cell lists, in sorted order."""
    return sorted(I.cells_of(m) for m in minimal_transversals(I.masks, cap=cap))


def alexander_dual(I: Ideal, cap: int | None = COVER_CAP) -> Ideal:
    return Ideal.from_masks(I.rows, I.cols, minimal_transversals(I.masks, cap=cap))


def ideal_height(I: Ideal, cap: int | None = COVER_CAP) -> int:
    return min(m.bit_count() for m in minimal_transversals(I.masks, cap=cap))


def is_cover(I: Ideal, cells) -> bool:
    m = I.mask_of(cells)
    return all(g & m for g in I.masks)


def is_minimal_cover(I: Ideal, cells) -> bool:
    m = I.mask_of(cells)
    if not all(g & m for g in I.masks):
        return False
    return all(not all(g & (m ^ b) for g in I.masks) for b in _bits(m))


def prime_of_map(psi: IsotoneMap) -> PrimeCover:
    """Cells ``(psi(q), q)`` of the prime attached to ``psi: Q -> P``.

    The cover lives on the ``|P| x |Q|`` grid, one cell per column.
    """
    return tuple(sorted((p, q) for q, p in enumerate(psi.image)))


def check_min_eq_hom(P: Poset, Q: Poset, hom_cap=HOM_CAP, cover_cap=COVER_CAP) -> bool:
    """Do the minimal primes of L(P,Q) coincide with the primes of Hom(Q,P)?"""
    covers = set(minimal_covers(build_L(P, Q, cap=hom_cap), cap=cover_cap))
    primes = {prime_of_map(psi) for psi in enumerate_hom(Q, P, cap=hom_cap)}
    return covers == primes


def duality_holds_computed(P: Poset, Q: Poset, hom_cap=HOM_CAP, cover_cap=COVER_CAP) -> bool:
    """Literal test of ``L(P,Q)^dual == tau(L(Q,P))``."""
    lhs = alexander_dual(build_L(P, Q, cap=hom_cap), cap=cover_cap)
    rhs = tau(build_L(Q, P, cap=hom_cap))
    return lhs == rhs
