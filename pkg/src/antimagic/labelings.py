"""Edge labelings, induced vertex sums, the local antimagic predicate,
labeling/guide matrices, and the side conditions required by the block
constructions.

A labeling assigns distinct positive integers to edges; the baseline case
is a bijection onto 1..q.  The induced sum of a vertex is the sum of its
incident labels, and those sums are the vertex colors.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import intervals
from .errors import InvalidParameterError
from .graphs import Graph


@dataclass(frozen=True)
class EdgeLabeling:
    graph: Graph
    labels: dict  # (u,v) with u<v -> positive integer

    def __post_init__(self):
        norm = {}
        for (u, v), a in self.labels.items():
            e = (u, v) if u < v else (v, u)
            if not self.graph.has_edge(*e):
                raise InvalidParameterError(f"label on non-edge {e}")
            if a < 1:
                raise InvalidParameterError(f"label {a} on {e} is not positive")
            norm[e] = a
        if len(norm) != self.graph.size:
            missing = set(self.graph.edges) - set(norm)
            raise InvalidParameterError(f"unlabeled edges: {sorted(missing)[:4]}")
        object.__setattr__(self, "labels", norm)

    @property
    def q(self):
        return self.graph.size

    def label_of(self, u, v):
        return self.labels[(u, v) if u < v else (v, u)]

    def is_injective(self):
        return len(set(self.labels.values())) == len(self.labels)

    def is_bijection(self):
        """True when the labels are exactly 1..q."""
        return sorted(self.labels.values()) == list(range(1, self.q + 1))


def induced_sums(labeling):
    """f+ for every vertex: sum of incident edge labels."""
    sums = {v: 0 for v in range(labeling.graph.order)}
    for (u, v), a in labeling.labels.items():
        sums[u] += a
        sums[v] += a
    return sums


def parity_balance(labeling):
    """Per-vertex flag: equally many odd and even incident labels."""
    odd = {v: 0 for v in range(labeling.graph.order)}
    even = {v: 0 for v in range(labeling.graph.order)}
    for (u, v), a in labeling.labels.items():
        bucket = odd if a % 2 else even
        bucket[u] += 1
        bucket[v] += 1
    return {v: odd[v] == even[v] for v in range(labeling.graph.order)}


@dataclass(frozen=True)
class VerificationReport:
    is_injective: bool
    is_local_antimagic: bool
    color_count: int
    colors: tuple
    parity_balanced: bool
    violations: tuple

    def serialize(self):
        lines = [
            f"color_count={self.color_count}",
            "colors=" + ",".join(str(c) for c in self.colors),
            f"is_injective={str(self.is_injective).lower()}",
            f"is_local_antimagic={str(self.is_local_antimagic).lower()}",
            f"parity_balanced={str(self.parity_balanced).lower()}",
        ]
        return "\n".join(lines) + "\n"


def verify(labeling):
    """Full check of the local antimagic predicate plus parity balance."""
    sums = induced_sums(labeling)
    assert sum(sums.values()) == 2 * sum(labeling.labels.values())  # handshake
    violations = []
    for u, v in labeling.graph.edges:
        if sums[u] == sums[v]:
            violations.append((u, v))
    injective = labeling.is_injective()
    balanced = all(parity_balance(labeling).values())
    ok = injective and not violations
    colors = tuple(sorted(set(sums.values())))
    return VerificationReport(
        is_injective=injective,
        is_local_antimagic=ok,
        color_count=len(colors),
        colors=colors,
        parity_balanced=balanced,
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class LabelingMatrix:
    order: int
    entries: tuple  # tuple of row tuples; None marks a non-edge
    vertex_list: tuple

    def row_sums(self):
        return tuple(sum(x for x in row if x is not None) for row in self.entries)


@dataclass(frozen=True)
class GuideEntry:
    magnitude: int
    direction: str  # intervals.ASCENDING / DESCENDING
    offset: int = 0  # join constructions use -1 for unboxed entries


@dataclass(frozen=True)
class GuideMatrix:
    entries: tuple  # tuple of row tuples over GuideEntry | None


def to_matrix(labeling, vertex_list=None):
    """Symmetric label matrix laid out by the given (or graph's) vertex list."""
    g = labeling.graph
    vl = tuple(vertex_list) if vertex_list is not None else g.vertex_list
    if sorted(vl) != list(range(g.order)):
        raise InvalidParameterError("vertex_list is not a permutation")
    pos = {v: i for i, v in enumerate(vl)}
    mat = [[None] * g.order for _ in range(g.order)]
    for (u, v), a in labeling.labels.items():
        mat[pos[u]][pos[v]] = a
        mat[pos[v]][pos[u]] = a
    return LabelingMatrix(g.order, tuple(tuple(r) for r in mat), vl)


def guide_of(matrix):
    """Sign the labels: odd -> ascending, even -> descending."""
    rows = []
    for row in matrix.entries:
        rows.append(tuple(
            None if a is None else GuideEntry(
                a, intervals.ASCENDING if a % 2 else intervals.DESCENDING
            )
            for a in row
        ))
    return GuideMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# side conditions for the block constructions

@dataclass(frozen=True)
class ConditionReport:
    conditions: dict  # name -> bool
    transformed: dict  # vertex -> transformed sum value
    failures: tuple  # (condition name, witness)

    @property
    def holds(self):
        return all(self.conditions.values())


def check_copy_conditions(labeling, p):
    """Conditions for expanding a labeling of H to p disjoint copies:
    (a) per-vertex parity balance, (b) equal sums imply equal degrees,
    (c) the transformed sums p*f+(v) - deg(v)(p-1)/2 separate distinct colors.
    """
    if p < 1:
        raise InvalidParameterError("need p >= 1")
    g = labeling.graph
    sums = induced_sums(labeling)
    balance = parity_balance(labeling)
    failures = []
    cond_a = all(balance.values())
    if not cond_a:
        failures.append(("a", tuple(v for v, ok in balance.items() if not ok)))
    transformed = {
        v: p * sums[v] - Fraction(g.degree(v) * (p - 1), 2) for v in range(g.order)
    }
    cond_b = True
    cond_c = True
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if sums[u] == sums[v] and g.degree(u) != g.degree(v):
                cond_b = False
                failures.append(("b", (u, v)))
            if sums[u] != sums[v] and transformed[u] == transformed[v]:
                cond_c = False
                failures.append(("c", (u, v)))
    transformed = {
        v: int(t) if t.denominator == 1 else t for v, t in transformed.items()
    }
    return ConditionReport({"a": cond_a, "b": cond_b, "c": cond_c},
                           transformed, tuple(failures))


def check_product_conditions(labeling, n):
    """Conditions on the outer factor's labeling when the fiber has order n:
    (iv) equal sums imply equal degrees, (v) the transformed sums
    g+(u)n^3 - (n^3-n)deg(u)/2 separate distinct colors.
    """
    if n < 1:
        raise InvalidParameterError("need n >= 1")
    g = labeling.graph
    sums = induced_sums(labeling)
    # n^3 - n is always even, so the transform stays integral
    transformed = {
        v: sums[v] * n ** 3 - (n ** 3 - n) * g.degree(v) // 2
        for v in range(g.order)
    }
    failures = []
    cond_iv = True
    cond_v = True
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if sums[u] == sums[v] and g.degree(u) != g.degree(v):
                cond_iv = False
                failures.append(("iv", (u, v)))
            if sums[u] != sums[v] and transformed[u] == transformed[v]:
                cond_v = False
                failures.append(("v", (u, v)))
    return ConditionReport({"iv": cond_iv, "v": cond_v}, transformed, tuple(failures))


# ---------------------------------------------------------------------------
# certificate text format: "p q" header, q lines "u v label",
# then metadata lines containing '=' (ignored on read)

def format_labeling(labeling, report=None, extra_lines=()):
    g = labeling.graph
    lines = [f"{g.order} {g.size}"]
    lines += [f"{u} {v} {labeling.label_of(u, v)}" for u, v in g.edges]
    if g.vertex_list != tuple(range(g.order)):
        lines.append("order " + " ".join(str(v) for v in g.vertex_list))
    if report is not None:
        lines.append(report.serialize().rstrip("\n"))
    lines += list(extra_lines)
    return "\n".join(lines) + "\n"


def read_labeling(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#") and "=" not in ln]
    if not lines:
        raise InvalidParameterError("empty labeling file")
    p, q = (int(t) for t in lines[0].split())
    edges = []
    labels = {}
    order = None
    for ln in lines[1:]:
        if ln.startswith("order"):
            order = tuple(int(t) for t in ln.split()[1:])
            continue
        u, v, a = (int(t) for t in ln.split()[:3])
        e = (u, v) if u < v else (v, u)
        edges.append(e)
        labels[e] = a
    if len(edges) != q:
        raise InvalidParameterError(f"expected {q} labeled edges, found {len(edges)}")
    graph = Graph(p, tuple(edges), order)
    return EdgeLabeling(graph, labels)
