"""Turn a doubled spanning tree on random metric points into a simple 2-edge-connected graph."""
import random

from cutgap.graphcore import MultiGraph
from cutgap.metric import ecsm_to_ecss, multiset_cost

rng = random.Random(4)
pts = [(rng.randint(0, 9), rng.randint(0, 9)) for _ in range(7)]
g = MultiGraph.complete(len(pts), lambda u, v: abs(pts[u][0] - pts[v][0]) + abs(pts[u][1] - pts[v][1]))
index = {e.pair: i for i, e in enumerate(g.edges)}
doubled = {index[v - 1, v]: 2 for v in range(1, len(pts))}
trace = []
out = ecsm_to_ecss(g, doubled, trace)
print(f"input cost {multiset_cost(g, doubled)} -> output cost {multiset_cost(g, out)}")
for step in trace:
    print(f"    split doubled {step['pair']} at {step['hub']} via {step['w']}, added {step['added']}")
print("edges:", sorted(g.edges[i].pair for i in out))
