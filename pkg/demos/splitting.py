"""Search for splits of small multigraphs and the witnesses behind the lower bounds."""
from cutgap.decompose import complete_witness_for_a1, f_lower_witness, split_search, splitting_gap_bound
from cutgap.graphcore import MultiGraph

k33 = MultiGraph.from_pairs(6, [(u, v) for u in range(3) for v in range(3, 6)])
print("K3,3 for (1,1):", f_lower_witness(1, 1, k33).reason)
print("K4 for (1,1):", split_search(MultiGraph.complete(4), 1, 1).summary())
for a in range(1, 5):
    w = complete_witness_for_a1(a)
    print(f"K{a + 2} shows f({a},1) >= {w.bound}: {w.verified}")
print("bound for c=2 k=2 t=1 n=10:", splitting_gap_bound(2, 2, 1, 10))
