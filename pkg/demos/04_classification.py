"""
Predicting duality from the shapes of P and Q
=============================================

predict_duality decides from connectivity, rootedness and chain structure
alone. verify_pair compares that against the computed duals and checks the
failure witness. The sweep repeats this for every pair of small posets.
"""

from collections import Counter

from posetdual import Poset, antichain, predict_duality, verify_pair
from posetdual.sweep import SweepConfig, run_sweep

V = Poset(3, [(2, 0), (2, 1)])
LAM = Poset(3, [(0, 2), (1, 2)])
N = Poset(4, [(0, 2), (1, 2), (1, 3)])

for P, Q in [(V, V), (V, LAM), (N, V), (antichain(2), antichain(2))]:
    r = verify_pair(P, Q)
    w = r.witness
    print(r.clause, r.predicted, r.computed, None if w is None else (w.kind, w.cover, r.witness_verified))

print(predict_duality(LAM, V).witness)

report = run_sweep(SweepConfig(max_n=4, min_n=1))
print(report.pairs_checked, "pairs,", len(report.disagreements), "disagreements")
print(Counter(report.clause_tallies).most_common())
