"""The Fibonacci family of Held-Karp extreme points and a few small catalogued ones.

Vertices are labelled 1..2t in the construction; internally vertex ``i`` is
stored as ``i - 1`` so that label 1 is the root vertex 0.
"""
from fractions import Fraction
from functools import lru_cache

from ..cutlp import FractionalSolution
from ..graphcore import CutSet


@lru_cache(maxsize=None)
def fibonacci(i: int) -> int:
    """F_1 = F_2 = 1."""
    if i < 1:
        raise ValueError("Fibonacci numbers are indexed from 1")
    a, b = 1, 1
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def fibonacci_pairs(t: int):
    """The seven edge groups of the construction, keyed by 1-based vertex pairs."""
    if t < 3:
        raise ValueError("the construction needs t >= 3")
    ft = fibonacci(t)
    x = {}

    def put(u, v, val):
        key = (min(u, v), max(u, v))
        if key in x:
            raise AssertionError(f"edge {key} generated twice")
        x[key] = Fraction(val)

    for i in range(1, t + 1):
        put(2 * i - 1, 2 * i, 1)
    for i in range(2, t):
        put(1, 2 * i, Fraction(fibonacci(t - i), ft))
    put(1, 2 * t, Fraction(1, ft))
    for i in range(3, t + 1):
        put(2 * i - 3, 2 * i - 1, Fraction(fibonacci(t - i + 1), ft))
        put(2 * i - 4, 2 * i - 1, 1 - Fraction(fibonacci(t - i + 2), ft))
    put(2, 3, Fraction(fibonacci(t - 1), ft))
    put(2 * t - 2, 2 * t, 1 - Fraction(1, ft))
    return x


def construct_fibonacci(t: int) -> FractionalSolution:
    pairs = fibonacci_pairs(t)
    return FractionalSolution.from_pairs(2 * t, {(u - 1, v - 1): val for (u, v), val in pairs.items()})


def canonical_laminar_family(t: int):
    """Singletons, the t pairs {2i-1, 2i} and the prefixes {1..2i} for i = 2..t-2.

    Sets are returned root-normalized (complemented when they contain label 1).
    """
    if t < 3:
        raise ValueError("the construction needs t >= 3")
    n = 2 * t
    sets = [[i] for i in range(1, n + 1)]
    sets += [[2 * i - 1, 2 * i] for i in range(1, t + 1)]
    sets += [list(range(1, 2 * i + 1)) for i in range(2, t - 1)]
    return [CutSet.of(n, [v - 1 for v in s]).normalized() for s in sets]


def sets_cross(a: int, b: int) -> bool:
    """Two root-avoiding bitmask sets cross when they overlap without nesting."""
    inter = a & b
    return bool(inter) and inter != a and inter != b


def is_laminar(sets) -> bool:
    masks = [s.mask if isinstance(s, CutSet) else s for s in sets]
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if sets_cross(masks[i], masks[j]):
                return False
    return True


def _from_edges(n, triples):
    return FractionalSolution.from_pairs(n, {(u, v): Fraction(val) for u, v, val in triples})


# Small extreme points with extremal properties (denominator / max degree),
# transcribed from their drawings. Labels are 0-based.
FIGURE_SOLUTIONS = {
    # n=6, denominator 2
    "a": _from_edges(6, [
        (0, 1, 1), (0, 4, "1/2"), (0, 5, "1/2"), (1, 2, "1/2"), (1, 3, "1/2"),
        (2, 3, "1/2"), (2, 4, 1), (3, 5, 1), (4, 5, "1/2"),
    ]),
    # n=7, maximum degree 4
    "b": _from_edges(7, [
        (0, 1, "1/2"), (0, 2, "1/2"), (0, 5, 1), (1, 3, "1/2"), (1, 6, 1),
        (2, 3, 1), (2, 4, "1/2"), (3, 4, "1/2"), (4, 5, "1/2"), (4, 6, "1/2"),
        (5, 6, "1/2"),
    ]),
    # n=8, denominator 3
    "c": _from_edges(8, [
        (0, 1, 1), (0, 4, "1/3"), (0, 6, "2/3"), (1, 2, "1/3"), (1, 3, "1/3"),
        (1, 7, "1/3"), (2, 3, "2/3"), (2, 4, 1), (3, 5, 1), (4, 5, "1/3"),
        (4, 6, "1/3"), (5, 7, "2/3"), (6, 7, 1),
    ]),
    # n=9, maximum degree 5
    "d": _from_edges(9, [
        (0, 1, "2/3"), (0, 3, 1), (0, 5, "1/3"), (1, 2, 1), (1, 4, "1/3"),
        (2, 4, "2/3"), (2, 5, "1/3"), (3, 4, "1/3"), (3, 8, "2/3"), (4, 6, "1/3"),
        (4, 7, "1/3"), (5, 7, 1), (5, 8, "1/3"), (6, 7, "2/3"), (6, 8, 1),
    ]),
    # n=9, denominator 4
    "e": _from_edges(9, [
        (0, 1, 1), (0, 4, "1/4"), (0, 7, "3/4"), (1, 2, "3/4"), (1, 3, "1/4"),
        (2, 3, "1/4"), (2, 4, 1), (3, 5, "1/2"), (3, 8, 1), (4, 5, "1/2"),
        (4, 7, "1/4"), (5, 6, 1), (6, 7, "1/2"), (6, 8, "1/2"), (7, 8, "1/2"),
    ]),
    # n=10, maximum degree 5 and denominator 5
    "f": _from_edges(10, [
        (0, 1, "1/5"), (0, 5, "4/5"), (0, 8, 1), (1, 2, "1/5"), (1, 7, "3/5"),
        (1, 9, 1), (2, 3, "2/5"), (2, 4, "2/5"), (2, 5, 1), (3, 4, "3/5"),
        (3, 7, 1), (4, 6, 1), (5, 6, "1/5"), (6, 7, "2/5"), (6, 8, "1/5"),
        (6, 9, "1/5"), (8, 9, "4/5"),
    ]),
}
