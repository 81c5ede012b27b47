"""Simple undirected graphs with an explicit vertex ordering.

The vertex ordering (``vertex_list``) is part of the value: it fixes the
row/column layout of every matrix built downstream, so two graphs with the
same edge set but different orderings produce different labeling matrices.
Vertices are dense integers 0..p-1.
"""

from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidParameterError


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple
    vertex_list: tuple = None

    def __post_init__(self):
        if self.order < 0:
            raise InvalidParameterError("order must be non-negative")
        seen = set()
        norm = []
        for u, v in self.edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise InvalidParameterError(f"edge ({u},{v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InvalidParameterError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))
        vl = self.vertex_list
        if vl is None:
            vl = tuple(range(self.order))
        else:
            vl = tuple(vl)
            if sorted(vl) != list(range(self.order)):
                raise InvalidParameterError("vertex_list is not a permutation of 0..p-1")
        object.__setattr__(self, "vertex_list", vl)

    @property
    def size(self):
        return len(self.edges)

    @cached_property
    def _adjacency(self):
        adj = {v: set() for v in range(self.order)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def neighbors(self, v):
        return frozenset(self._adjacency[v])

    def degree(self, v):
        return len(self._adjacency[v])

    def has_edge(self, u, v):
        return v in self._adjacency.get(u, ())

    def position(self, v):
        """Row/column index of vertex v under the fixed ordering."""
        return self.vertex_list.index(v)

    def with_vertex_list(self, vertex_list):
        """Same graph, different matrix ordering."""
        return Graph(self.order, self.edges, tuple(vertex_list))

    def adjacency_matrix(self):
        """0/1 matrix laid out by vertex_list (list of lists of int)."""
        p = self.order
        pos = {v: i for i, v in enumerate(self.vertex_list)}
        mat = [[0] * p for _ in range(p)]
        for u, v in self.edges:
            mat[pos[u]][pos[v]] = 1
            mat[pos[v]][pos[u]] = 1
        return mat

    def component_count(self):
        seen = set()
        count = 0
        for s in range(self.order):
            if s in seen:
                continue
            count += 1
            stack = [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                for w in self._adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count


# ---------------------------------------------------------------------------
# generators

def cycle(n):
    if n < 3:
        raise InvalidParameterError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def null(n):
    if n < 1:
        raise InvalidParameterError("null graph needs n >= 1")
    return Graph(n, ())


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise InvalidParameterError("complete_bipartite needs a, b >= 1")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def prism(n):
    """Cartesian product C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1."""
    if n < 3:
        raise InvalidParameterError("prism needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, tuple(edges))


def octahedron():
    """K_{2,2,2}: parts {0,1}, {2,3}, {4,5}."""
    parts = [(0, 1), (2, 3), (4, 5)]
    edges = []
    for i in range(3):
        for j in range(i + 1, 3):
            for u in parts[i]:
                for v in parts[j]:
                    edges.append((u, v))
    return Graph(6, tuple(edges))


def generate(family, **params):
    """Dispatch by family name; used by the CLI."""
    try:
        if family == "cycle":
            return cycle(params["n"])
        if family == "null":
            return null(params["n"])
        if family == "complete_bipartite":
            return complete_bipartite(params["a"], params["b"])
        if family == "prism":
            return prism(params["n"])
        if family == "octahedron":
            return octahedron()
    except KeyError as exc:
        raise InvalidParameterError(
            f"family {family!r} needs parameter {exc.args[0]!r}") from None
    raise InvalidParameterError(f"unknown graph family {family!r}")


# ---------------------------------------------------------------------------
# composition operators

def one_point_union(g, h, a, b):
    """Amalgamate vertex b of h onto vertex a of g."""
    if not 0 <= a < g.order:
        raise InvalidParameterError(f"vertex {a} not in first graph")
    if not 0 <= b < h.order:
        raise InvalidParameterError(f"vertex {b} not in second graph")
    remap = {}
    nxt = g.order
    for v in range(h.order):
        if v == b:
            remap[v] = a
        else:
            remap[v] = nxt
            nxt += 1
    edges = list(g.edges) + [(remap[u], remap[v]) for u, v in h.edges]
    return Graph(g.order + h.order - 1, tuple(edges))


def join(g, h):
    """Disjoint union plus all edges between the two vertex sets."""
    shift = g.order
    edges = list(g.edges)
    edges += [(u + shift, v + shift) for u, v in h.edges]
    edges += [(u, v + shift) for u in range(g.order) for v in range(h.order)]
    vl = tuple(g.vertex_list) + tuple(v + shift for v in h.vertex_list)
    return Graph(g.order + h.order, tuple(edges), vl)


def disjoint_copies(h, p):
    """p disjoint copies, copy-major order following h's vertex list."""
    if p < 1:
        raise InvalidParameterError("need p >= 1 copies")
    n = h.order
    pos = {v: i for i, v in enumerate(h.vertex_list)}
    edges = []
    for i in range(p):
        base = i * n
        edges += [(base + pos[u], base + pos[v]) for u, v in h.edges]
    return Graph(p * n, tuple(edges))


def lexicographic(g, h):
    """Lexicographic product: (u,u')~(v,v') iff uv in E(g), or u=v and u'v' in E(h).

    Vertex (l-th listed of g, j-th listed of h) becomes index l*|V(h)|+j,
    so the adjacency matrix is A_g (x) J_n + I_p (x) A_h.
    """
    n = h.order
    gpos = {v: i for i, v in enumerate(g.vertex_list)}
    hpos = {v: i for i, v in enumerate(h.vertex_list)}
    edges = []
    for u, v in g.edges:
        lu, lv = gpos[u], gpos[v]
        for j in range(n):
            for k in range(n):
                edges.append((lu * n + j, lv * n + k))
    for l in range(g.order):
        for x, y in h.edges:
            edges.append((l * n + hpos[x], l * n + hpos[y]))
    return Graph(g.order * n, tuple(edges))


# ---------------------------------------------------------------------------
# text format: "p q" header, q lines "u v", '#' comments, optional "order ..." line

def format_graph(g):
    lines = [f"{g.order} {g.size}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    if g.vertex_list != tuple(range(g.order)):
        lines.append("order " + " ".join(str(v) for v in g.vertex_list))
    return "\n".join(lines) + "\n"


def read_graph(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InvalidParameterError("empty graph file")
    p, q = (int(t) for t in lines[0].split())
    edges = []
    order = None
    for ln in lines[1:]:
        if ln.startswith("order"):
            order = tuple(int(t) for t in ln.split()[1:])
            continue
        u, v = (int(t) for t in ln.split()[:2])
        edges.append((u, v))
    if len(edges) != q:
        raise InvalidParameterError(f"expected {q} edges, found {len(edges)}")
    return Graph(p, tuple(edges), order)
