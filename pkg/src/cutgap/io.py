"""JSON and edge-list formats. Every number is written as exact rational text."""
import json
from fractions import Fraction

from .cutlp import FractionalSolution
from .exactmath import as_fraction, fraction_str
from .extremepoints.directed import DirectedSolution
from .graphcore import CutSet, Edge, GraphError, MultiGraph
from .reductions import PathCoverInstance, SetCoverInstance


class FormatError(ValueError):
    """Malformed input; the message names the offending field."""


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=True) + "\n"


def jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return fraction_str(obj)
    if isinstance(obj, float):
        raise TypeError("floating-point values are never serialized")
    if isinstance(obj, CutSet):
        return sorted(obj.members)
    if isinstance(obj, MultiGraph):
        return graph_to_json(obj)
    if isinstance(obj, FractionalSolution):
        return solution_to_json(obj)
    if isinstance(obj, DirectedSolution):
        return directed_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _field(data, key, where):
    if not isinstance(data, dict):
        raise FormatError(f"{where}: expected an object")
    if key not in data:
        raise FormatError(f"{where}: missing field '{key}'")
    return data[key]


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _rational(value, where):
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def graph_to_json(g: MultiGraph):
    return {
        "n": g.n,
        "edges": [{"u": e.u, "v": e.v, "cost": fraction_str(e.cost), "mult": e.mult} for e in g.edges],
    }


def graph_from_json(data, where="graph") -> MultiGraph:
    n = _int(_field(data, "n", where), f"{where}.n")
    raw = _field(data, "edges", where)
    if not isinstance(raw, list):
        raise FormatError(f"{where}.edges: expected a list")
    edges = []
    for i, item in enumerate(raw):
        at = f"{where}.edges[{i}]"
        u = _int(_field(item, "u", at), f"{at}.u")
        v = _int(_field(item, "v", at), f"{at}.v")
        cost = _rational(item.get("cost", 1), f"{at}.cost")
        mult = _int(item.get("mult", 1), f"{at}.mult")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"{at}: bad endpoints ({u},{v}) for n = {n}")
        try:
            edges.append(Edge(u, v, cost, mult))
        except (GraphError, ValueError) as exc:
            raise FormatError(f"{at}: {exc}") from None
    try:
        return MultiGraph(n, edges)
    except (GraphError, ValueError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def _edge_key(g, i):
    e = g.edges[i]
    key = f"{e.u}-{e.v}"
    if len(g.pair_index()[e.pair]) > 1:
        key += f"#{i}"
    return key


def solution_to_json(x: FractionalSolution):
    return {
        "graph": graph_to_json(x.graph),
        "values": {_edge_key(x.graph, i): fraction_str(v) for i, v in x.values.items()},
    }


def solution_from_json(data, where="solution") -> FractionalSolution:
    values = _field(data, "values", where)
    if not isinstance(values, dict):
        raise FormatError(f"{where}.values: expected an object")
    if "graph" in data:
        g = graph_from_json(data["graph"], f"{where}.graph")
    else:
        n = _int(_field(data, "n", where), f"{where}.n")
        pairs = []
        for key in values:
            u, v = _parse_key(key, f"{where}.values")[:2]
            pairs.append((min(u, v), max(u, v)))
        try:
            g = MultiGraph.from_pairs(n, sorted(set(pairs)))
        except (GraphError, ValueError) as exc:
            raise FormatError(f"{where}: {exc}") from None
    index = g.pair_index()
    out = {}
    for key, val in values.items():
        at = f"{where}.values[{key!r}]"
        u, v, idx = _parse_key(key, at)
        pair = (min(u, v), max(u, v))
        if idx is None:
            ids = index.get(pair)
            if not ids:
                raise FormatError(f"{at}: no edge {pair} in the graph")
            if len(ids) > 1:
                raise FormatError(f"{at}: pair {pair} is parallel; use the 'u-v#index' form")
            idx = ids[0]
        elif not (0 <= idx < g.m and g.edges[idx].pair == pair):
            raise FormatError(f"{at}: edge index {idx} does not join {pair}")
        out[idx] = _rational(val, at)
    try:
        return FractionalSolution(g, out)
    except (GraphError, ValueError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def _parse_key(key, where):
    idx = None
    body = key
    if "#" in key:
        body, tail = key.split("#", 1)
        if not tail.isdigit():
            raise FormatError(f"{where}: bad edge index in {key!r}")
        idx = int(tail)
    parts = body.split("-")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"{where}: edge key {key!r} is not of the form 'u-v'")
    return int(parts[0]), int(parts[1]), idx


def directed_to_json(y: DirectedSolution):
    return {"n": y.n, "arcs": {f"{u}->{v}": fraction_str(val) for (u, v), val in y.arcs.items()}}


def directed_from_json(data, where="directed") -> DirectedSolution:
    n = _int(_field(data, "n", where), f"{where}.n")
    arcs = _field(data, "arcs", where)
    values = {}
    for key, val in arcs.items():
        parts = key.split("->")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"{where}.arcs: key {key!r} is not of the form 'u->v'")
        values[int(parts[0]), int(parts[1])] = _rational(val, f"{where}.arcs[{key!r}]")
    try:
        return DirectedSolution.build(n, values)
    except (GraphError, ValueError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def pcot_to_json(inst: PathCoverInstance):
    return {"tree": graph_to_json(inst.tree), "pairs": [list(p) for p in inst.pairs]}


def pcot_from_json(data, where="instance") -> PathCoverInstance:
    tree = graph_from_json(_field(data, "tree", where), f"{where}.tree")
    raw = _field(data, "pairs", where)
    pairs = []
    for i, p in enumerate(raw):
        if not isinstance(p, list) or len(p) != 2:
            raise FormatError(f"{where}.pairs[{i}]: expected [u, v]")
        pairs.append((_int(p[0], f"{where}.pairs[{i}][0]"), _int(p[1], f"{where}.pairs[{i}][1]")))
    try:
        return PathCoverInstance(tree, tuple(pairs))
    except (GraphError, ValueError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def setcover_to_json(sc: SetCoverInstance):
    ground = len(sc.ground) if sc.ground == tuple(range(1, len(sc.ground) + 1)) else list(sc.ground)
    return {"ground": ground, "triples": [list(t) for t in sc.triples]}


def setcover_from_json(data, where="instance") -> SetCoverInstance:
    ground = _field(data, "ground", where)
    if not isinstance(ground, (int, list)) or isinstance(ground, bool):
        raise FormatError(f"{where}.ground: expected an integer or a list")
    triples = _field(data, "triples", where)
    if not isinstance(triples, list) or not all(isinstance(t, list) for t in triples):
        raise FormatError(f"{where}.triples: expected a list of lists")
    sc = SetCoverInstance.build(ground, triples)
    problems = sc.violations()
    if problems:
        raise FormatError(f"{where}.triples: " + "; ".join(problems))
    return sc


def multiset_to_json(ms):
    return {"multiset": [[i, c] for i, c in sorted(ms.items()) if c]}


def multiset_from_json(data, where="multiset"):
    raw = _field(data, "multiset", where)
    out = {}
    for j, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"{where}.multiset[{j}]: expected [edge id, multiplicity]")
        i = _int(item[0], f"{where}.multiset[{j}][0]")
        c = _int(item[1], f"{where}.multiset[{j}][1]")
        if c < 0:
            raise FormatError(f"{where}.multiset[{j}][1]: negative multiplicity")
        out[i] = out.get(i, 0) + c
    return out


def parse_edge_list(text, where="edge list") -> MultiGraph:
    """One ``u v [cost [mult]]`` line per edge; ``#`` starts a comment.

    An optional leading ``n N`` line fixes the vertex count; without it the
    count is one more than the largest vertex id.
    """
    n = None
    edges = []
    first = True
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        at = f"{where} line {lineno}"
        if first and tok[0] == "n":
            if len(tok) != 2 or not tok[1].isdigit():
                raise FormatError(f"{at}: expected 'n <vertex count>'")
            n = int(tok[1])
            first = False
            continue
        first = False
        if len(tok) not in (2, 3, 4) or not (tok[0].isdigit() and tok[1].isdigit()):
            raise FormatError(f"{at}: expected 'u v [cost [mult]]'")
        cost = _rational(tok[2], f"{at} cost") if len(tok) > 2 else Fraction(1)
        if len(tok) > 3 and not tok[3].isdigit():
            raise FormatError(f"{at} mult: expected a positive integer")
        mult = int(tok[3]) if len(tok) > 3 else 1
        try:
            edges.append(Edge(int(tok[0]), int(tok[1]), cost, mult))
        except (GraphError, ValueError) as exc:
            raise FormatError(f"{at}: {exc}") from None
    if n is None:
        if not edges:
            raise FormatError(f"{where}: no edges and no 'n' line")
        n = 1 + max(max(e.u, e.v) for e in edges)
    try:
        return MultiGraph(n, edges)
    except (GraphError, ValueError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def format_edge_list(g: MultiGraph) -> str:
    lines = [f"n {g.n}"] + [f"{e.u} {e.v} {fraction_str(e.cost)} {e.mult}" for e in g.edges]
    return "\n".join(lines) + "\n"


def to_dot(g: MultiGraph, labels=None) -> str:
    """Write-only DOT rendering; ``labels`` maps edge index to a rational."""
    out = ["graph G {"]
    out += [f"  {v};" for v in range(g.n)]
    for i, e in enumerate(g.edges):
        attrs = []
        if labels is not None and i in labels:
            attrs.append(f'label="{fraction_str(labels[i])}"')
        elif e.cost != 1:
            attrs.append(f'label="{fraction_str(e.cost)}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        for _ in range(e.mult):
            out.append(f"  {e.u} -- {e.v}{suffix};")
    out.append("}")
    return "\n".join(out) + "\n"


def load_json(path, where=None):
    where = where or str(path)
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"{where}: cannot read file ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{where}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_graph(path):
    """JSON graph, or the edge-list text format when the file is not JSON."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"{path}: cannot read file ({exc.strerror})") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
        return graph_from_json(data.get("graph", data) if isinstance(data, dict) else data)
    return parse_edge_list(text, str(path))
