"""Brute-force reference computations, independent of the package internals."""

import itertools

import numpy as np


def labeled_partial_orders(n):
    """All strict partial orders on range(n), as boolean ``<`` tables.

    Filters every irreflexive relation: transitive + irreflexive implies
    antisymmetric.
    """
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for mask in range(1 << len(offdiag)):
        lt = np.zeros((n, n), dtype=bool)
        for k, (i, j) in enumerate(offdiag):
            if mask >> k & 1:
                lt[i, j] = True
        two = (lt.astype(int) @ lt.astype(int)) > 0
        if (two & ~lt).any():
            continue
        out.append(lt)
    return out


def isomorphic(lt_a, lt_b):
    n = lt_a.shape[0]
    if n != lt_b.shape[0] or lt_a.sum() != lt_b.sum():
        return False
    for perm in itertools.permutations(range(n)):
        p = list(perm)
        if (lt_a[np.ix_(p, p)] == lt_b).all():
            return True
    return False


def iso_classes(n):
    """Representatives of the labeled partial orders up to isomorphism."""
    reps = []
    for lt in labeled_partial_orders(n):
        if not any(isomorphic(lt, r) for r in reps):
            reps.append(lt)
    return reps


def brute_force_hom(P, Q):
    """Image tuples of all isotone maps, by filtering every function P -> Q."""
    tp, tq = P.table, Q.table
    out = []
    for image in itertools.product(range(Q.n), repeat=P.n):
        if all(tq[image[i], image[j]] for i in range(P.n) for j in range(P.n) if tp[i, j]):
            out.append(image)
    return out


def brute_force_hom_count(P, Q):
    """Vectorized count of isotone maps over all ``|Q|^|P|`` functions."""
    images = np.array(list(itertools.product(range(Q.n), repeat=P.n)), dtype=np.intp)
    ok = np.ones(len(images), dtype=bool)
    for i in range(P.n):
        for j in range(P.n):
            if P.table[i, j]:
                ok &= Q.table[images[:, i], images[:, j]]
    return int(ok.sum()), {tuple(r) for r in images[ok].tolist()}


def brute_force_minimal_covers(rows, cols, gens):
    """Minimal hitting sets of the cell sets ``gens``, via all 2^(rows*cols) subsets."""
    ncells = rows * cols
    assert ncells <= 20
    subsets = np.arange(1 << ncells, dtype=np.int64)
    hits = np.ones(len(subsets), dtype=bool)
    for g in gens:
        gm = sum(1 << (p * cols + q) for p, q in g)
        hits &= (subsets & gm) != 0
    minimal = hits.copy()
    for b in range(ncells):
        has = (subsets >> b) & 1 == 1
        minimal[has] &= ~hits[subsets[has] ^ (1 << b)]
    out = []
    for s in np.flatnonzero(minimal).tolist():
        out.append(tuple((b // cols, b % cols) for b in range(ncells) if s >> b & 1))
    return sorted(out)
