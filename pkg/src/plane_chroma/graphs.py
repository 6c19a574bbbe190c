"""Small simple graphs, (1,d)-labelled graphs and their combinatorial checks."""
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations

from .errors import InputTooLarge, InvalidInput

CANON_LIMIT = 8
SMALL_UDG_LIMIT = 5
CYCLE_LIMIT = 12


def _norm_edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInput(f"edge {u}-{v} out of range for n={self.n}")
            seen.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def adjacency(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u, v):
        return _norm_edge(u, v) in set(self.edges)

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def relabel(self, perm):
        """perm[i] is the new name of vertex i."""
        return SimpleGraph(self.n, tuple(_norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices):
        index = {v: i for i, v in enumerate(vertices)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return SimpleGraph(len(vertices), tuple(es))

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


class EdgeLabel(Enum):
    UNIT = "UNIT"
    D = "D"


@dataclass(frozen=True)
class BicoloredGraph:
    base: SimpleGraph
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        norm = {}
        for (u, v), lab in self.labels.items():
            norm[_norm_edge(u, v)] = EdgeLabel(lab)
        if set(norm) != set(self.base.edges):
            raise InvalidInput("every edge needs exactly one label")
        object.__setattr__(self, "labels", norm)

    @property
    def n(self):
        return self.base.n

    def edges_with(self, label):
        return [e for e in self.base.edges if self.labels[e] is label]

    def to_json(self):
        return {
            "n": self.n,
            "edges": [list(e) for e in self.base.edges],
            "labels": {f"{u}-{v}": self.labels[(u, v)].value for u, v in self.base.edges},
        }


class RangeKind(Enum):
    MIN_D = "MIN_D"
    MAX_D = "MAX_D"


@dataclass(frozen=True)
class RangeConstraint:
    kind: RangeKind
    bound: Fraction
    witness_cycle: tuple


def graph_from_json(data):
    """Parse {"n", "edges"[, "labels"]}; returns SimpleGraph or BicoloredGraph."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["n"])
        edges = tuple((int(u), int(v)) for u, v in data["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed graph json: {exc}") from None
    g = SimpleGraph(n, edges)
    labels = data.get("labels")
    if labels is None:
        return g
    parsed = {}
    for key, lab in labels.items():
        try:
            u, v = (int(t) for t in key.split("-"))
            parsed[(u, v)] = EdgeLabel(lab)
        except ValueError:
            raise InvalidInput(f"bad label entry {key!r}: {lab!r}") from None
    return BicoloredGraph(g, parsed)


def contains_k4(g):
    adj = g.adjacency()
    for quad in combinations(range(g.n), 4):
        if all(b in adj[a] for a, b in combinations(quad, 2)):
            return set(quad)
    return None


def contains_k23(g):
    """A (2-set, 3-set) pair forming K_{2,3} as a subgraph, or None."""
    adj = g.adjacency()
    for a, b in combinations(range(g.n), 2):
        common = sorted(adj[a] & adj[b])
        if len(common) >= 3:
            return ({a, b}, set(common[:3]))
    return None


def canonical_form(g):
    """Lexicographically smallest relabelled edge set; n <= 8."""
    if g.n > CANON_LIMIT:
        raise InputTooLarge(f"canonical form supports n <= {CANON_LIMIT}")
    best = None
    for perm in permutations(range(g.n)):
        es = tuple(sorted(_norm_edge(perm[u], perm[v]) for u, v in g.edges))
        if best is None or es < best:
            best = es
    return SimpleGraph(g.n, best or ())


def enumerate_small_graphs(n):
    """One representative per isomorphism class, in canonical form."""
    if n > SMALL_UDG_LIMIT:
        raise InputTooLarge(f"enumeration supports n <= {SMALL_UDG_LIMIT}")
    pairs = list(combinations(range(n), 2))
    classes = {}
    for mask in range(1 << len(pairs)):
        es = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
        c = canonical_form(SimpleGraph(n, es))
        classes.setdefault(c.edges, c)
    return sorted(classes.values(), key=lambda h: (len(h.edges), h.edges))


def is_udg_small(g):
    """Unit distance realizability for graphs on at most five vertices."""
    if g.n > SMALL_UDG_LIMIT:
        raise InputTooLarge(f"exact UDG test supports n <= {SMALL_UDG_LIMIT}")
    return contains_k4(g) is None and contains_k23(g) is None


def max_edges_small(n):
    return max(len(h.edges) for h in enumerate_small_graphs(n) if is_udg_small(h))


def triangles(g):
    adj = g.adjacency()
    return [t for t in combinations(range(g.n), 3)
            if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]]]


def triangle_chain_rigid(g):
    """True when the graph is a chain of triangles glued along edges.

    Every edge and every vertex must lie on a triangle, and the triangles
    must be connected through shared edges.
    """
    if g.n == 0:
        return False
    tris = triangles(g)
    if not tris:
        return False
    covered = set()
    for a, b, c in tris:
        covered.update({(a, b), (a, c), (b, c)})
    if covered != set(g.edges):
        return False
    if {v for t in tris for v in t} != set(range(g.n)):
        return False
    by_edge = {}
    for i, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            by_edge.setdefault(e, []).append(i)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        a, b, c = tris[i]
        for e in ((a, b), (a, c), (b, c)):
            for j in by_edge[e]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == len(tris)


def simple_cycles(g, limit=CYCLE_LIMIT):
    """Each simple cycle once, as a vertex tuple starting at its minimum."""
    if g.n > limit:
        raise InputTooLarge(f"cycle enumeration supports n <= {limit}")
    adj = [sorted(s) for s in g.adjacency()]
    out = []

    def walk(start, path, on_path):
        last = path[-1]
        for w in adj[last]:
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:  # skip the reversed copy
                    out.append(tuple(path))
            elif w > start and w not in on_path:
                on_path.add(w)
                path.append(w)
                walk(start, path, on_path)
                path.pop()
                on_path.discard(w)

    for s in range(g.n):
        walk(s, [s], {s})
    return out


def offcolor_cycle_constraints(bg):
    """Range restrictions on d from cycles with exactly one off-colour edge.

    A cycle of length m with one UNIT edge forces d >= 1/(m-1); with one
    D edge it forces d <= m-1.
    """
    out = []
    for cyc in simple_cycles(bg.base):
        m = len(cyc)
        labs = [bg.labels[_norm_edge(cyc[i], cyc[(i + 1) % m])] for i in range(m)]
        units = labs.count(EdgeLabel.UNIT)
        if units == 1:
            out.append(RangeConstraint(RangeKind.MIN_D, Fraction(1, m - 1), cyc))
        elif units == m - 1:
            out.append(RangeConstraint(RangeKind.MAX_D, Fraction(m - 1), cyc))
    return out


def inverse(bg):
    """Swap UNIT and D labels (the picture scaled by 1/d)."""
    flip = {EdgeLabel.UNIT: EdgeLabel.D, EdgeLabel.D: EdgeLabel.UNIT}
    return BicoloredGraph(bg.base, {e: flip[lab] for e, lab in bg.labels.items()})
