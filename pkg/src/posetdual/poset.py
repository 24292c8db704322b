"""Finite posets on the elements ``0..n-1``.

A :class:`Poset` stores its cover pairs (the Hasse diagram) together with the
full ``n x n`` boolean reachability table, so ``leq`` is a table lookup.
Posets are immutable and hashable; two posets compare equal only when they
are the same *labeled* order. Use :func:`canonical_key` to compare up to
isomorphism.
"""

from __future__ import annotations

import graphlib
import itertools
import json
from typing import Iterable, NamedTuple

import numpy as np

from .errors import CycleError, PosetError

#: Largest size accepted by :func:`canonical_key` (factorial search).
CANONICAL_MAX_N = 8
#: Largest size accepted by :func:`generate_posets`.
GENERATE_MAX_N = 5


def _closure(leq: np.ndarray) -> np.ndarray:
    leq = leq.copy()
    for k in range(leq.shape[0]):
        leq |= leq[:, k : k + 1] & leq[k : k + 1, :]
    return leq


def _reduction(leq: np.ndarray) -> np.ndarray:
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    s = strict.astype(np.int64)
    return strict & ~((s @ s) > 0)


class Poset:
    """An immutable finite poset.

    ``covers`` holds pairs ``(i, j)`` meaning ``j`` covers ``i`` (so ``i < j``).
    Redundant input pairs are absorbed: the stored covers are always the
    transitive reduction of the order.
    """

    __slots__ = ("n", "covers", "_leq", "_hash")

    def __init__(self, n: int, covers: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 1:
            raise PosetError("a poset needs at least one element")
        pairs = []
        for pair in covers:
            i, j = (int(x) for x in pair)
            if not (0 <= i < n and 0 <= j < n):
                raise PosetError(f"cover pair {(i, j)} out of range for n={n}")
            if i == j:
                raise CycleError((i, i))
            pairs.append((i, j))

        graph = {j: set() for j in range(n)}
        for i, j in pairs:
            graph[j].add(i)
        try:
            tuple(graphlib.TopologicalSorter(graph).static_order())
        except graphlib.CycleError as exc:
            raise CycleError(exc.args[1]) from None

        leq = np.eye(n, dtype=bool)
        for i, j in pairs:
            leq[i, j] = True
        leq = _closure(leq)
        leq.setflags(write=False)
        self._leq = leq
        self.n = n
        red = _reduction(leq)
        self.covers = tuple(zip(*map(lambda a: a.tolist(), np.nonzero(red))))
        self._hash = hash((n, self.covers))

    @classmethod
    def from_leq(cls, leq) -> Poset:
        leq = np.asarray(leq, dtype=bool)
        return cls(leq.shape[0], zip(*np.nonzero(_reduction(leq))))

    # -- order queries -------------------------------------------------

    @property
    def table(self) -> np.ndarray:
        """Read-only reachability table: ``table[i, j]`` iff ``i <= j``."""
        return self._leq

    def __len__(self) -> int:
        return self.n

    def _check(self, *elements: int) -> None:
        for e in elements:
            if not 0 <= e < self.n:
                raise PosetError(f"element {e} out of range for n={self.n}")

    def leq(self, i: int, j: int) -> bool:
        self._check(i, j)
        return bool(self._leq[i, j])

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def up_set(self, i: int) -> frozenset[int]:
        self._check(i)
        return frozenset(np.flatnonzero(self._leq[i]).tolist())

    def down_set(self, i: int) -> frozenset[int]:
        self._check(i)
        return frozenset(np.flatnonzero(self._leq[:, i]).tolist())

    def minimal_elements(self) -> list[int]:
        return [j for j in range(self.n) if self._leq[:, j].sum() == 1]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(self.n) if self._leq[i].sum() == 1]

    def has_unique_min_or_max(self) -> bool:
        return len(self.minimal_elements()) == 1 or len(self.maximal_elements()) == 1

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        comp = self._leq | self._leq.T
        return [(i, j) for i, j in itertools.combinations(range(self.n), 2) if not comp[i, j]]

    # -- structure -----------------------------------------------------

    def opposite(self) -> Poset:
        return Poset(self.n, [(j, i) for i, j in self.covers])

    def is_connected(self) -> bool:
        return len(self._component_labels()) == 1

    def _component_labels(self) -> list[list[int]]:
        comp = self._leq | self._leq.T
        seen: set[int] = set()
        parts = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, part = [start], []
            seen.add(start)
            while stack:
                x = stack.pop()
                part.append(x)
                for y in np.flatnonzero(comp[x]).tolist():
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            parts.append(sorted(part))
        return parts

    def decompose_direct_sum(self) -> list[Summand]:
        """Connected components, ordered by their smallest element."""
        out = []
        for part in self._component_labels():
            out.append(Summand(self.induced(part), tuple(part)))
        return out

    def induced(self, elements: Iterable[int]) -> Poset:
        """Subposet on ``elements``, re-indexed in the given order."""
        idx = list(elements)
        return Poset.from_leq(self._leq[np.ix_(idx, idx)])

    def is_rooted(self) -> bool:
        """No incomparable pair has a common strict upper bound."""
        return _first_branch(self, upward=True) is None

    def is_co_rooted(self) -> bool:
        """No incomparable pair has a common strict lower bound."""
        return _first_branch(self, upward=False) is None

    def is_chain(self) -> bool:
        return bool((self._leq | self._leq.T).all())

    def is_antichain(self) -> bool:
        return not self.covers

    def is_sum_of_chains(self) -> bool:
        return all(s.poset.is_chain() for s in self.decompose_direct_sum())

    # -- value semantics -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Poset({self.n}, {list(self.covers)})"

    def to_dict(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers]}

    @classmethod
    def from_dict(cls, data) -> Poset:
        try:
            return cls(data["n"], [tuple(c) for c in data["covers"]])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, PosetError):
                raise
            raise PosetError(f"malformed poset object: {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Poset:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PosetError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


class Summand(NamedTuple):
    """A connected component and the original indices of its elements."""

    poset: Poset
    elements: tuple[int, ...]


def _first_branch(P: Poset, upward: bool):
    # lexicographically first (a, b, c) with a, b incomparable and c a common
    # strict upper bound (upward) or lower bound (not upward)
    t = P.table
    for a, b in P.incomparable_pairs():
        for c in range(P.n):
            if upward and t[a, c] and t[b, c]:
                return a, b, c
            if not upward and t[c, a] and t[c, b]:
                return a, b, c
    return None


def new_poset(n: int, covers: Iterable[tuple[int, int]] = ()) -> Poset:
    return Poset(n, covers)


def chain(n: int) -> Poset:
    return Poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return Poset(n, [])


def direct_sum(*posets: Poset) -> Poset:
    covers, offset = [], 0
    for P in posets:
        covers.extend((i + offset, j + offset) for i, j in P.covers)
        offset += P.n
    return Poset(offset, covers)


def canonical_key(P: Poset, max_n: int = CANONICAL_MAX_N) -> bytes:
    """Isomorphism-invariant key: the lexicographically least relabeled table.

    Brute force over all ``n!`` relabelings, so ``n`` is capped by ``max_n``.
    """
    n = P.n
    if n > max_n:
        raise PosetError(f"canonical_key limited to n <= {max_n}, got {n}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    mats = P.table[perms[:, :, None], perms[:, None, :]].reshape(len(perms), n * n)
    best = mats[np.lexsort(mats.T[::-1])[0]]
    return bytes([n]) + np.packbits(best).tobytes()


def _order_ideals(P: Poset) -> list[frozenset[int]]:
    # down-closed subsets; n is tiny so filter the power set
    t = P.table
    out = []
    for mask in range(1 << P.n):
        members = [i for i in range(P.n) if mask >> i & 1]
        if all(t[j, i] <= bool(mask >> j & 1) for i in members for j in range(P.n)):
            out.append(frozenset(members))
    return out


def generate_posets(n: int, max_n: int = GENERATE_MAX_N) -> list[Poset]:
    """One poset per isomorphism class of ``n``-element posets, in key order.

    Every ``n``-poset is an ``(n-1)``-poset with a maximal element adjoined,
    so the classes of size ``n`` are obtained by placing a new top element
    above each order ideal of each smaller representative.
    """
    if not 1 <= n <= max_n:
        raise PosetError(f"generate_posets requires 1 <= n <= {max_n}, got {n}")
    reps = {canonical_key(chain(1)): chain(1)}
    for size in range(2, n + 1):
        nxt: dict[bytes, Poset] = {}
        for R in reps.values():
            new = size - 1
            for ideal in _order_ideals(R):
                leq = np.zeros((size, size), dtype=bool)
                leq[:new, :new] = R.table
                leq[new, new] = True
                leq[sorted(ideal), new] = True
                Q = Poset.from_leq(leq)
                nxt.setdefault(canonical_key(Q), Q)
        reps = nxt
    return [reps[k] for k in sorted(reps)]
