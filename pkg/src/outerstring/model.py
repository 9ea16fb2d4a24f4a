"""Core combinatorial model: graphs, cyclic orders, monotone NAE formulas.

Vertices are dense integer ids 0..n-1.  A cyclic order is stored
rotation-canonically (lowest id first); reflections are distinct.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import ArgumentError, FormatError


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex ids 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    @staticmethod
    def of(n: int, edge_list) -> "Graph":
        edges = set()
        for u, v in edge_list:
            if u == v:
                raise ArgumentError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u},{v}) out of range [0,{n})")
            edges.add(_norm_edge(u, v))
        return Graph(n, frozenset(edges))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        adj = self.adjacency()
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return False
        return True


def complement(g: Graph) -> Graph:
    """Edge uv present iff absent in g (u != v)."""
    edges = {(u, v) for u, v in combinations(range(g.n), 2)} - set(g.edges)
    return Graph(g.n, frozenset(edges))


def cycle_graph(n: int) -> Graph:
    return Graph.of(n, [(i, (i + 1) % n) for i in range(n)])


def _canonical_rotation(order: tuple[int, ...]) -> tuple[int, ...]:
    if not order:
        return order
    i = order.index(min(order))
    return order[i:] + order[:i]


@dataclass(frozen=True)
class OrderedGraph:
    """A graph with a cyclic order of its vertices.

    Two ordered graphs whose orders differ by a rotation compare equal;
    reflections do not (orientation is tracked).
    """

    graph: Graph
    order: tuple[int, ...]

    @staticmethod
    def of(graph: Graph, order) -> "OrderedGraph":
        order = tuple(order)
        if sorted(order) != list(range(graph.n)):
            raise ArgumentError("order must be a permutation of 0..n-1")
        return OrderedGraph(graph, _canonical_rotation(order))

    @staticmethod
    def natural(graph: Graph) -> "OrderedGraph":
        return OrderedGraph.of(graph, range(graph.n))

    @property
    def n(self) -> int:
        return self.graph.n

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def pairs_interleave(order, pair1, pair2) -> bool:
    """Whether two vertex pairs alternate around the cyclic order."""
    a, c = pair1
    b, d = pair2
    if len({a, b, c, d}) != 4:
        raise ArgumentError("pairs must consist of four distinct vertices")
    pos = {v: i for i, v in enumerate(order)}
    for v in (a, b, c, d):
        if v not in pos:
            raise ArgumentError(f"vertex {v} not in order")
    # walk the arc from a to c; interleaved iff it contains exactly one of b,d
    n = len(order)
    i = pos[a]
    seen_b = seen_d = False
    while True:
        i = (i + 1) % n
        if order[i] == c:
            break
        if order[i] == b:
            seen_b = True
        elif order[i] == d:
            seen_d = True
    return seen_b != seen_d


def induced_ordered_subgraph(og: OrderedGraph, s) -> tuple[OrderedGraph, dict[int, int]]:
    """Restrict to vertex set s, relabelling to 0..|s|-1 along the old ids.

    Returns the subgraph and the old->new relabelling map.
    """
    s = set(s)
    for v in s:
        if not (0 <= v < og.n):
            raise ArgumentError(f"vertex {v} out of range")
    keep = sorted(s)
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in og.graph.edges if u in s and v in s]
    order = tuple(relabel[v] for v in og.order if v in s)
    return OrderedGraph.of(Graph.of(len(keep), edges), order), relabel


def is_c3c5_free(g: Graph):
    """Return (True, None) or (False, witness) with an induced C3 or C5.

    Direct enumeration: triangles via adjacency triples, induced C5 via
    5-subsets.  Desk-scale graphs only.
    """
    adj = g.adjacency()
    for u, v in g.sorted_edges():
        common = adj[u] & adj[v]
        if common:
            return False, (u, v, min(common))
    for sub in combinations(range(g.n), 5):
        w = _induced_c5_order(g, sub)
        if w is not None:
            return False, w
    return True, None


def _induced_c5_order(g: Graph, sub) -> tuple | None:
    inside = [sum(1 for b in sub if b != a and g.has_edge(a, b)) for a in sub]
    if any(d != 2 for d in inside):
        return None
    # 5 vertices, all of degree 2 inside, connected => a 5-cycle
    order = [sub[0]]
    prev = None
    while len(order) < 5:
        nxt = [b for b in sub if b != order[-1] and b != prev and g.has_edge(order[-1], b)]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    if not g.has_edge(order[-1], order[0]):
        return None
    return tuple(order)


# ---------------------------------------------------------------------------
# Monotone NAE-3SAT formulas.

@dataclass(frozen=True)
class NaeFormula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    @staticmethod
    def of(num_vars: int, clauses) -> "NaeFormula":
        return NaeFormula(num_vars, tuple(tuple(c) for c in clauses))


@dataclass(frozen=True)
class Assignment:
    values: tuple[bool, ...]

    @staticmethod
    def of(values) -> "Assignment":
        return Assignment(tuple(bool(v) for v in values))

    def complement(self) -> "Assignment":
        return Assignment(tuple(not v for v in self.values))


def validate_formula(f: NaeFormula):
    """Return (True, 'ok') or (False, description of the first violation)."""
    counts = [0] * f.num_vars
    for ci, clause in enumerate(f.clauses):
        if len(clause) != 3:
            return False, f"clause {ci} does not have exactly 3 literals"
        if len(set(clause)) != 3:
            return False, f"repeated variable in clause {ci}"
        for v in clause:
            if not (0 <= v < f.num_vars):
                return False, f"variable {v} in clause {ci} out of range"
            counts[v] += 1
    for v, c in enumerate(counts):
        if c < 2:
            word = "once" if c == 1 else f"{c} times"
            return False, f"variable {v} appears {word}; every variable must appear in at least two clauses"
    return True, "ok"


def nae_satisfies(f: NaeFormula, a: Assignment) -> bool:
    """Every clause has at least one and at most two true variables."""
    if len(a.values) != f.num_vars:
        raise ArgumentError("assignment length does not match variable count")
    for clause in f.clauses:
        t = sum(1 for v in clause if a.values[v])
        if t == 0 or t == 3:
            return False
    return True


def fano_formula() -> NaeFormula:
    """The 7 lines of the Fano plane; NAE-unsatisfiable."""
    lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
    return NaeFormula.of(7, lines)


# ---------------------------------------------------------------------------
# Serialization.

def write_graph(og: OrderedGraph, labels: dict[int, str] | None = None) -> str:
    obj = {
        "n": og.n,
        "order": list(og.order),
        "edges": [list(e) for e in og.graph.sorted_edges()],
    }
    if labels:
        obj["labels"] = {str(k): labels[k] for k in sorted(labels)}
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def parse_graph(text: str) -> OrderedGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(obj, dict):
        raise FormatError("top-level value must be an object")
    for key in ("n", "order", "edges"):
        if key not in obj:
            raise FormatError(f"missing field {key!r}")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise FormatError("'n' must be a non-negative integer")
    order = obj["order"]
    if sorted(order) != list(range(n)):
        raise FormatError("'order' must be a permutation of 0..n-1")
    seen = set()
    for e in obj["edges"]:
        if not (isinstance(e, list) and len(e) == 2):
            raise FormatError(f"edge {e!r} must be a 2-element array")
        key = _norm_edge(*e)
        if key in seen:
            raise FormatError(f"duplicate edge {e}")
        seen.add(key)
    try:
        return OrderedGraph.of(Graph.of(n, obj["edges"]), order)
    except ArgumentError as e:
        raise FormatError(str(e)) from None


def write_cnf(f: NaeFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for c in f.clauses:
        lines.append(" ".join(str(v + 1) for v in c) + " 0")
    return "\n".join(lines) + "\n"


def parse_cnf(text: str) -> NaeFormula:
    """DIMACS cnf, monotone, exactly 3 positive literals per clause."""
    num_vars = None
    num_clauses = None
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"line {lineno}: malformed problem line")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise FormatError(f"line {lineno}: clause before 'p cnf' header")
        lits = [int(tok) for tok in line.split()]
        if not lits or lits[-1] != 0:
            raise FormatError(f"line {lineno}: clause must end in 0")
        lits = lits[:-1]
        if any(v < 0 for v in lits):
            raise FormatError(f"line {lineno}: monotone formula required (negative literal)")
        if len(lits) != 3:
            raise FormatError(f"line {lineno}: exactly 3 literals per clause required")
        if any(v == 0 or v > num_vars for v in lits):
            raise FormatError(f"line {lineno}: literal out of range")
        clauses.append(tuple(v - 1 for v in lits))
    if num_vars is None:
        raise FormatError("missing 'p cnf' header")
    if num_clauses is not None and num_clauses != len(clauses):
        raise FormatError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return NaeFormula.of(num_vars, clauses)
