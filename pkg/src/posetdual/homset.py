"""Isotone (order-preserving) maps between finite posets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapExceeded, PosetError
from .poset import Poset

#: Default bound on ``|Q| ** |P|`` for :func:`enumerate_hom`.
HOM_CAP = 10**6


@dataclass(frozen=True)
class IsotoneMap:
    source: Poset
    target: Poset
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(x) for x in self.image))
        if not is_isotone(self.source, self.target, self.image):
            raise PosetError(f"image {list(self.image)} is not order preserving")

    def __call__(self, p: int) -> int:
        return self.image[p]

    def __len__(self):
        return len(self.image)

    def to_list(self) -> list[int]:
        return list(self.image)


def _validate_image(P: Poset, Q: Poset, image: Sequence[int]) -> None:
    if len(image) != P.n:
        raise PosetError(f"image has length {len(image)}, source has {P.n} elements")
    for q in image:
        if not 0 <= q < Q.n:
            raise PosetError(f"image value {q} out of range for target of size {Q.n}")


def is_isotone(P: Poset, Q: Poset, image: Sequence[int]) -> bool:
    """True iff ``image`` is order preserving; checking the covers of P suffices."""
    _validate_image(P, Q, image)
    t = Q.table
    return all(t[image[i], image[j]] for i, j in P.covers)


def enumerate_hom(P: Poset, Q: Poset, cap: int | None = HOM_CAP) -> list[IsotoneMap]:
    """All isotone maps ``P -> Q`` in lexicographic order of their images.

    Elements of P are assigned in index order; each candidate value is
    restricted by every already-assigned element comparable to the current
    one, which keeps the output lexicographic without a final sort.
    """
    if cap is not None and Q.n**P.n > cap:
        raise CapExceeded(f"|Q|^|P| = {Q.n}^{P.n}", cap)
    tp, tq = P.table, Q.table
    below = [[j for j in range(i) if tp[j, i]] for i in range(P.n)]
    above = [[j for j in range(i) if tp[i, j]] for i in range(P.n)]
    image = [0] * P.n
    out: list[IsotoneMap] = []

    def extend(i: int) -> None:
        if i == P.n:
            out.append(_trusted(P, Q, image))
            return
        allowed = np.ones(Q.n, dtype=bool)
        for j in below[i]:
            allowed &= tq[image[j]]
        for j in above[i]:
            allowed &= tq[:, image[j]]
        for q in np.flatnonzero(allowed).tolist():
            image[i] = q
            extend(i + 1)

    extend(0)
    return out


def _trusted(P: Poset, Q: Poset, image) -> IsotoneMap:
    # skip re-validation for maps produced by the enumerator
    m = object.__new__(IsotoneMap)
    object.__setattr__(m, "source", P)
    object.__setattr__(m, "target", Q)
    object.__setattr__(m, "image", tuple(image))
    return m


def fixpoints(phi: IsotoneMap) -> frozenset[int]:
    if phi.source != phi.target:
        raise PosetError("fixpoints needs a self-map (source == target)")
    return frozenset(p for p, q in enumerate(phi.image) if p == q)


def compose(psi: IsotoneMap, phi: IsotoneMap) -> IsotoneMap:
    """``psi . phi``: first ``phi``, then ``psi``."""
    if phi.target != psi.source:
        raise PosetError("maps are not composable")
    return IsotoneMap(phi.source, psi.target, [psi.image[q] for q in phi.image])


def identity(P: Poset) -> IsotoneMap:
    return _trusted(P, P, range(P.n))
