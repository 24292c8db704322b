"""Structural prediction of when ``L(P,Q)^dual == tau(L(Q,P))``, with witnesses.

:func:`predict_duality` decides the equality from order-theoretic properties
of P and Q alone. On failure it builds a certificate that can be checked
against the ideals directly:

* ``high-prime``: a minimal cover of ``L(P,Q)`` with more than ``|Q|`` cells
  (or, when only Q is connected, of ``L(Q,P)`` with more than ``|P|`` cells,
  flagged by ``swapped``); such a prime is never of the form ``p_psi``.
* ``disconnected-monomial``: a prime ``p_psi`` for an isotone ``psi: Q -> P``
  together with a generator of ``L(P,Q)`` that it misses, so ``p_psi`` is
  not even a prime over ``L(P,Q)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .duality import COVER_CAP, PrimeCover, duality_holds_computed, is_minimal_cover
from .homset import HOM_CAP, is_isotone
from .ideal import Ideal, Monomial, build_L, embed, ideal_product, tau
from .poset import Poset, _first_branch

HOLDING_CLAUSES = (
    "some-chain",
    "both-rooted",
    "both-co-rooted",
    "P-connected-Q-sum-of-chains",
    "Q-connected-P-sum-of-chains",
)
FAILING_CLAUSES = (
    "fails-disconnected",
    "fails-rooted-mismatch",
    "fails-co-rooted-mismatch",
    "fails-general",
)


@dataclass(frozen=True)
class Witness:
    kind: str
    config: tuple[int, ...]
    cover: Optional[PrimeCover] = None
    monomial: Optional[Monomial] = None
    # high-prime only: the cover belongs to L(Q,P) instead of L(P,Q)
    swapped: bool = False
    # high-prime only: built on the opposite posets (upper/lower bounds flipped)
    opposite: bool = False

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "config": list(self.config)}
        if self.cover is not None:
            d["cover"] = [list(c) for c in self.cover]
        if self.monomial is not None:
            d["monomial"] = [list(c) for c in self.monomial]
        if self.kind == "high-prime":
            d["swapped"] = self.swapped
            d["opposite"] = self.opposite
        return d


@dataclass(frozen=True)
class DualityVerdict:
    holds: bool
    clause: str
    witness: Optional[Witness] = None


def find_non_rooted_config(Q: Poset):
    """First ``(q1, q2, q3)`` with q1, q2 incomparable and ``q1, q2 < q3``."""
    return _first_branch(Q, upward=True)


def find_non_co_rooted_config(Q: Poset):
    """First ``(q1, q2, q3)`` with q1, q2 incomparable and ``q3 < q1, q2``."""
    return _first_branch(Q, upward=False)


def build_high_prime(P: Poset, Q: Poset, p1, p2, p3, q1, q2, q3, *, verify=True) -> PrimeCover:
    """Minimal prime of ``L(P,Q)`` of height ``|Q| + |up(q1) & up(q2)|``.

    Needs p1, p2 incomparable above p3 in P and q1, q2 incomparable below q3
    in Q. Row p1 takes the up-set of q1, row p2 the up-set of q2, and row p3
    every column outside both.
    """
    if P.comparable(p1, p2):
        raise ValueError(f"p1={p1} and p2={p2} are comparable in P")
    if not (P.lt(p3, p1) and P.lt(p3, p2)):
        raise ValueError(f"p3={p3} is not below both p1={p1} and p2={p2} in P")
    if Q.comparable(q1, q2):
        raise ValueError(f"q1={q1} and q2={q2} are comparable in Q")
    if not (Q.lt(q1, q3) and Q.lt(q2, q3)):
        raise ValueError(f"q3={q3} is not above both q1={q1} and q2={q2} in Q")
    up1, up2 = Q.up_set(q1), Q.up_set(q2)
    cells = {(p1, q) for q in up1} | {(p2, q) for q in up2}
    cells |= {(p3, q) for q in range(Q.n) if q not in up1 and q not in up2}
    cover = tuple(sorted(cells))
    if verify and not is_minimal_cover(build_L(P, Q), cover):
        raise RuntimeError(f"constructed cells {cover} are not a minimal prime of L(P,Q)")
    return cover


def build_disconnected_witness(P: Poset, Q: Poset) -> tuple[PrimeCover, Monomial]:
    """Prime ``p_psi`` and a generator ``u_phi`` of L(P,Q) it misses.

    P1 (resp. Q1) is the component of P (resp. Q) holding element 0 and P2
    (Q2) is the rest. psi sends Q1 to p1 and Q2 to p2, phi sends P1 to q2
    and P2 to q1, where each representative is the lowest index available.
    """
    pc, qc = P.decompose_direct_sum(), Q.decompose_direct_sum()
    if len(pc) < 2 or len(qc) < 2:
        raise ValueError("both posets must be disconnected")
    P1, Q1 = set(pc[0].elements), set(qc[0].elements)
    p1, p2 = pc[0].elements[0], pc[1].elements[0]
    q1, q2 = qc[0].elements[0], qc[1].elements[0]
    cover = tuple(sorted((p1 if q in Q1 else p2, q) for q in range(Q.n)))
    monomial = tuple((p, q2 if p in P1 else q1) for p in range(P.n))
    return cover, monomial


def _high_prime_witness(A: Poset, B: Poset, swapped: bool) -> Witness:
    # A connected and not a chain; B lacks the property A would need it to share
    if find_non_rooted_config(B) is not None and find_non_co_rooted_config(A) is not None:
        b1, b2, b3 = find_non_rooted_config(B)
        a1, a2, a3 = find_non_co_rooted_config(A)
        cover = build_high_prime(A, B, a1, a2, a3, b1, b2, b3)
        opposite = False
    else:
        b1, b2, b3 = find_non_co_rooted_config(B)
        a1, a2, a3 = find_non_rooted_config(A)
        cover = build_high_prime(A.opposite(), B.opposite(), a1, a2, a3, b1, b2, b3)
        opposite = True
    return Witness(
        "high-prime",
        config=(a1, a2, a3, b1, b2, b3),
        cover=cover,
        swapped=swapped,
        opposite=opposite,
    )


def predict_duality(P: Poset, Q: Poset, with_witness: bool = True) -> DualityVerdict:
    """Classify the pair (P, Q) without computing any ideal.

    Holding clauses are tried in the order: some chain, both rooted, both
    co-rooted, P connected with Q a sum of chains, and the mirror case.
    """
    pcon, qcon = P.is_connected(), Q.is_connected()
    if not (pcon or qcon):
        w = None
        if with_witness:
            cover, mono = build_disconnected_witness(P, Q)
            w = Witness("disconnected-monomial", config=cover_config(P, Q), cover=cover, monomial=mono)
        return DualityVerdict(False, "fails-disconnected", w)
    if P.is_chain() or Q.is_chain():
        return DualityVerdict(True, "some-chain")
    if P.is_rooted() and Q.is_rooted():
        return DualityVerdict(True, "both-rooted")
    if P.is_co_rooted() and Q.is_co_rooted():
        return DualityVerdict(True, "both-co-rooted")
    if pcon and Q.is_sum_of_chains():
        return DualityVerdict(True, "P-connected-Q-sum-of-chains")
    if qcon and P.is_sum_of_chains():
        return DualityVerdict(True, "Q-connected-P-sum-of-chains")

    A, B, swapped = (P, Q, False) if pcon else (Q, P, True)
    if A.is_rooted():
        clause = "fails-rooted-mismatch"
    elif A.is_co_rooted():
        clause = "fails-co-rooted-mismatch"
    else:
        clause = "fails-general"
    w = _high_prime_witness(A, B, swapped) if with_witness else None
    return DualityVerdict(False, clause, w)


def cover_config(P: Poset, Q: Poset) -> tuple[int, ...]:
    pc, qc = P.decompose_direct_sum(), Q.decompose_direct_sum()
    return (pc[0].elements[0], pc[1].elements[0], qc[0].elements[0], qc[1].elements[0])


def verify_witness(P: Poset, Q: Poset, w: Witness) -> bool:
    """Check a witness against freshly built ideals."""
    if w.kind == "high-prime":
        L = build_L(Q, P) if w.swapped else build_L(P, Q)
        return is_minimal_cover(L, w.cover) and len(w.cover) > L.cols
    if w.kind == "disconnected-monomial":
        L = build_L(P, Q)
        cols = [q for _, q in w.cover]
        if sorted(cols) != list(range(Q.n)):
            return False
        psi = [0] * Q.n
        for p, q in w.cover:
            psi[q] = p
        return (
            is_isotone(Q, P, psi)
            and tuple(sorted(w.monomial)) in set(L.gens)
            and not set(w.monomial) & set(w.cover)
        )
    raise ValueError(f"unknown witness kind {w.kind!r}")


def chain_sum_dual(P: Poset, Q: Poset) -> Ideal:
    """Product of ``tau(L(Q_i, P))`` over the chain components Q_i of Q.

    Each factor is placed on its own columns of the full ``|P| x |Q|`` grid,
    so the factors use disjoint variables and the squarefree product is exact.
    """
    if not Q.is_sum_of_chains():
        raise ValueError("Q must be a direct sum of chains")
    out = None
    for comp in Q.decompose_direct_sum():
        factor = embed(tau(build_L(comp.poset, P)), P.n, Q.n, col_map=comp.elements)
        out = factor if out is None else ideal_product(out, factor)
    return out


@dataclass
class PairReport:
    P: Poset
    Q: Poset
    predicted: bool
    clause: str
    computed: bool
    witness: Optional[Witness] = None
    witness_verified: Optional[bool] = None
    extra: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.predicted == self.computed and self.witness_verified is not False

    def to_dict(self) -> dict:
        return {
            "P": self.P.to_dict(),
            "Q": self.Q.to_dict(),
            "predicted": self.predicted,
            "clause": self.clause,
            "computed": self.computed,
            "agree": self.agree,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "witness_verified": self.witness_verified,
        }


def verify_pair(P: Poset, Q: Poset, hom_cap=HOM_CAP, cover_cap=COVER_CAP) -> PairReport:
    verdict = predict_duality(P, Q)
    computed = duality_holds_computed(P, Q, hom_cap=hom_cap, cover_cap=cover_cap)
    verified = None
    if verdict.witness is not None:
        verified = verify_witness(P, Q, verdict.witness)
    return PairReport(P, Q, verdict.holds, verdict.clause, computed, verdict.witness, verified)
