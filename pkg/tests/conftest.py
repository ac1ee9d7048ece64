import random
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings

from cutgap.graphcore import Edge, MultiGraph

settings.register_profile("repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def random_metric_graph(rng: random.Random, n, span=6):
    """Complete graph with L1 distances between random lattice points (always metric)."""
    pts = [(rng.randint(0, span), rng.randint(0, span)) for _ in range(n)]
    return MultiGraph.complete(n, lambda u, v: abs(pts[u][0] - pts[v][0]) + abs(pts[u][1] - pts[v][1]))


def random_connected_graph(rng: random.Random, n, extra, max_cost=5):
    edges = [Edge(rng.randrange(v), v, Fraction(rng.randint(0, max_cost))) for v in range(1, n)]
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.append(Edge(u, v, Fraction(rng.randint(0, max_cost))))
    return MultiGraph(n, edges)


def random_tree_pairs(rng: random.Random, n):
    return [(rng.randrange(v), v) for v in range(1, n)]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
