"""Squarefree monomial ideals on a ``rows x cols`` grid of variables.

A variable ``x_pq`` is the cell ``(p, q)``. A squarefree monomial is its
support, stored as a sorted tuple of cells, and an ideal is the antichain
(under inclusion) of the supports of its minimal generators. No polynomial
arithmetic is involved: for squarefree ideals divisibility is containment.

Internally supports are also handled as int bitmasks with bit
``p * cols + q`` for cell ``(p, q)``.
"""

from __future__ import annotations

import json
from typing import Iterable

from .homset import HOM_CAP, IsotoneMap, enumerate_hom
from .poset import Poset

Cell = tuple[int, int]
Monomial = tuple[Cell, ...]


def _minimize_masks(masks: Iterable[int]) -> list[int]:
    # equal-degree supports never contain each other, so compare only
    # against strictly smaller kept generators
    kept: list[int] = []
    smaller: list[int] = []
    degree = -1
    for m in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if m.bit_count() != degree:
            degree = m.bit_count()
            smaller = list(kept)
        if not any(k & m == k for k in smaller):
            kept.append(m)
    return kept


class Ideal:
    """Minimal generating set of a squarefree monomial ideal on a fixed grid."""

    __slots__ = ("rows", "cols", "gens", "_masks")

    def __init__(self, rows: int, cols: int, supports: Iterable[Iterable[Cell]] = ()):
        self.rows, self.cols = int(rows), int(cols)
        masks = []
        for support in supports:
            m = 0
            for p, q in support:
                if not (0 <= p < self.rows and 0 <= q < self.cols):
                    raise ValueError(f"cell {(p, q)} outside {self.rows}x{self.cols} grid")
                m |= 1 << (p * self.cols + q)
            masks.append(m)
        self._set_masks(masks)

    def _set_masks(self, masks):
        kept = _minimize_masks(masks)
        gens = sorted(self._cells(m) for m in kept)
        self.gens: tuple[Monomial, ...] = tuple(gens)
        self._masks = tuple(self.mask_of(g) for g in gens)

    @classmethod
    def from_masks(cls, rows: int, cols: int, masks: Iterable[int]) -> Ideal:
        I = cls.__new__(cls)
        I.rows, I.cols = rows, cols
        I._set_masks(masks)
        return I

    @property
    def masks(self) -> tuple[int, ...]:
        """Generator bitmasks, in the same order as ``gens``."""
        return self._masks

    def _cells(self, mask: int) -> Monomial:
        out = []
        while mask:
            low = mask & -mask
            b = low.bit_length() - 1
            out.append(divmod(b, self.cols))
            mask ^= low
        return tuple(out)

    def mask_of(self, cells: Iterable[Cell]) -> int:
        m = 0
        for p, q in cells:
            m |= 1 << (p * self.cols + q)
        return m

    def cells_of(self, mask: int) -> Monomial:
        return self._cells(mask)

    @property
    def grid(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, monomial) -> bool:
        """Ideal membership: some generator divides ``monomial``."""
        m = self.mask_of(monomial)
        return any(g & m == g for g in self._masks)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.grid == other.grid and self.gens == other.gens

    def __hash__(self):
        return hash((self.rows, self.cols, self.gens))

    def __repr__(self):
        return f"Ideal({self.rows}x{self.cols}, {len(self.gens)} gens)"

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "gens": [[list(c) for c in g] for g in self.gens],
        }

    @classmethod
    def from_dict(cls, data) -> Ideal:
        return cls(data["rows"], data["cols"], [[tuple(c) for c in g] for g in data["gens"]])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def monomial_of_map(phi: IsotoneMap) -> Monomial:
    """Support of ``u_phi``: the cells ``(p, phi(p))``, one per row."""
    return tuple((p, q) for p, q in enumerate(phi.image))


def build_L(P: Poset, Q: Poset, cap: int | None = HOM_CAP) -> Ideal:
    """The ideal generated by ``u_phi`` for every isotone ``phi: P -> Q``."""
    maps = enumerate_hom(P, Q, cap=cap)
    cols = Q.n
    # all u_phi have degree |P| with distinct supports, so nothing is dropped
    masks = [sum(1 << (p * cols + q) for p, q in enumerate(phi.image)) for phi in maps]
    return Ideal.from_masks(P.n, Q.n, masks)


def tau(I: Ideal) -> Ideal:
    """Swap the two indices of every variable."""
    return Ideal(I.cols, I.rows, [[(q, p) for p, q in g] for g in I.gens])


def ideal_equals(I: Ideal, J: Ideal) -> bool:
    return I == J


def _same_grid(I: Ideal, J: Ideal) -> None:
    if I.grid != J.grid:
        raise ValueError(f"grid mismatch: {I.grid} vs {J.grid}")


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_grid(I, J)
    return Ideal.from_masks(I.rows, I.cols, I.masks + J.masks)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    """Product in the squarefree model: pairwise unions of supports.

    This is the radical of the true product. It equals the product exactly
    when the two ideals live on disjoint variable sets.
    """
    _same_grid(I, J)
    return Ideal.from_masks(I.rows, I.cols, [a | b for a in I.masks for b in J.masks])


def embed(I: Ideal, rows: int, cols: int, row_map=None, col_map=None) -> Ideal:
    """Relabel ``I`` into a larger ``rows x cols`` grid.

    ``row_map[p]`` / ``col_map[q]`` give the new index of old row ``p`` /
    column ``q``; identity when omitted.
    """
    rm = list(range(I.rows)) if row_map is None else list(row_map)
    cm = list(range(I.cols)) if col_map is None else list(col_map)
    return Ideal(rows, cols, [[(rm[p], cm[q]) for p, q in g] for g in I.gens])
