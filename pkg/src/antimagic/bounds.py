"""Exact chromatic number, odd girth, the lexicographic lower bound, and
backtracking search for local antimagic colorings with few colors.

The search is the oracle of last resort: it re-derives witness labelings
that are otherwise only known from pictures, and it settles the local
antimagic chromatic number of tiny graphs by exhaustion.
"""

import random
from dataclasses import dataclass
from math import ceil

from .errors import NotApplicableError, SizeLimitError
from .labelings import EdgeLabeling

EXHAUSTIVE_EDGE_LIMIT = 16
CHI_LA_EDGE_LIMIT = 10


# ---------------------------------------------------------------------------
# chromatic number

def _greedy_coloring(adj, order):
    colors = {}
    for v in order:
        used = {colors[w] for w in adj[v] if w in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors.values()) + 1 if colors else 0


def _greedy_clique(adj, order):
    clique = []
    for v in order:
        if all(v in adj[w] for w in clique):
            clique.append(v)
    return len(clique)


def _k_colorable(adj, order, k):
    colors = {}

    def assign(idx, used):
        if idx == len(order):
            return True
        v = order[idx]
        banned = {colors[w] for w in adj[v] if w in colors}
        # symmetry breaking: allow at most one brand-new color
        for c in range(min(used + 1, k)):
            if c not in banned:
                colors[v] = c
                if assign(idx + 1, max(used, c + 1)):
                    return True
                del colors[v]
        return False

    return assign(0, 0)


def chromatic_number(g, limit=64):
    """Exact chromatic number by branch and bound."""
    if g.order > limit:
        raise SizeLimitError(f"graph order {g.order} exceeds limit {limit}")
    if g.order == 0:
        return 0
    if not g.edges:
        return 1
    adj = {v: g.neighbors(v) for v in range(g.order)}
    order = sorted(range(g.order), key=lambda v: -len(adj[v]))
    ub = _greedy_coloring(adj, order)
    lb = max(2, _greedy_clique(adj, order))
    for k in range(lb, ub):
        if _k_colorable(adj, order, k):
            return k
    return ub


# ---------------------------------------------------------------------------
# odd girth

def odd_girth(g):
    """Length of a shortest odd cycle; None when the graph is bipartite."""
    best = None
    for s in range(g.order):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.neighbors(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        for u, v in g.edges:
            if u in dist and v in dist and dist[u] == dist[v]:
                cand = dist[u] + dist[v] + 1
                if best is None or cand < best:
                    best = cand
    return best


@dataclass(frozen=True)
class BoundReport:
    chi_g: int
    chi_h: int
    odd_girth: int
    lower: int
    upper: int = None

    def serialize(self):
        lines = [
            f"chi_g={self.chi_g}",
            f"chi_h={self.chi_h}",
            f"lower={self.lower}",
            f"odd_girth={self.odd_girth}",
        ]
        if self.upper is not None:
            lines.append(f"upper={self.upper}")
        return "\n".join(sorted(lines)) + "\n"


def lexi_lower_bound(g, h, upper=None):
    """2*chi(H) + ceil(chi(H)/k) where 2k+1 is g's shortest odd cycle."""
    og = odd_girth(g)
    if og is None:
        raise NotApplicableError("lower bound needs a non-bipartite outer graph")
    k = (og - 1) // 2
    chi_h = chromatic_number(h)
    lower = 2 * chi_h + ceil(chi_h / k)
    return BoundReport(chromatic_number(g), chi_h, og, lower, upper)


# ---------------------------------------------------------------------------
# backtracking search for local antimagic labelings

@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "none" | "budget"
    labeling: EdgeLabeling = None
    nodes: int = 0

    @property
    def proven_none(self):
        return self.status == "none"


class _Budget(Exception):
    pass


def search_local_antimagic(g, max_colors, require_parity_balance=False,
                           node_limit=1_000_000, seed=0, progress=None):
    """Backtracking search for a local antimagic labeling with at most
    ``max_colors`` induced sums, optionally parity-balanced at every vertex.

    Returns a SearchResult whose status distinguishes a proven-empty search
    space ("none") from an exhausted node budget ("budget").  Deterministic
    for fixed (seed, node_limit).
    """
    q = g.size
    if require_parity_balance and any(g.degree(v) % 2 for v in range(g.order)):
        return SearchResult("none", None, 0)  # odd degree can never balance
    edge_order = sorted(
        g.edges, key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e)
    )
    counter = [0]
    exhaustive = q <= EXHAUSTIVE_EDGE_LIMIT

    def attempt(label_order, cap):
        found = {}

        # reimplemented inline so the found assignment is captured
        deg = [g.degree(v) for v in range(g.order)]
        incident_left = deg[:]
        vsum = [0] * g.order
        odd_cnt = [0] * g.order
        adj = [g.neighbors(v) for v in range(g.order)]
        used = [False] * (q + 1)
        remaining_parity = [0, 0]
        for a in label_order:
            remaining_parity[a % 2] += 1
        assignment = {}
        sum_counts = {}

        def feasible_parity(w):
            need_odd = deg[w] // 2 - odd_cnt[w]
            even_cnt = (deg[w] - incident_left[w]) - odd_cnt[w]
            need_even = deg[w] // 2 - even_cnt
            if need_odd < 0 or need_even < 0:
                return False
            return (need_odd <= remaining_parity[1]
                    and need_even <= remaining_parity[0])

        def place(k):
            if k == q:
                found.update(assignment)
                return True
            counter[0] += 1
            if counter[0] > cap:
                raise _Budget
            u, v = edge_order[k]
            for a in label_order:
                if used[a]:
                    continue
                used[a] = True
                remaining_parity[a % 2] -= 1
                assignment[(u, v)] = a
                ok = True
                completed = []
                for w in (u, v):
                    vsum[w] += a
                    incident_left[w] -= 1
                    if a % 2:
                        odd_cnt[w] += 1
                    if incident_left[w] == 0:
                        completed.append(w)
                if require_parity_balance:
                    ok = feasible_parity(u) and feasible_parity(v)
                if ok:
                    for w in completed:
                        if any(incident_left[x] == 0 and vsum[x] == vsum[w]
                               for x in adj[w]):
                            ok = False
                            break
                if ok:
                    for w in completed:
                        sum_counts[vsum[w]] = sum_counts.get(vsum[w], 0) + 1
                    if len(sum_counts) > max_colors:
                        ok = False
                    if ok and place(k + 1):
                        return True
                    for w in completed:
                        s = vsum[w]
                        sum_counts[s] -= 1
                        if not sum_counts[s]:
                            del sum_counts[s]
                for w in (u, v):
                    vsum[w] -= a
                    incident_left[w] += 1
                    if a % 2:
                        odd_cnt[w] -= 1
                used[a] = False
                remaining_parity[a % 2] += 1
                del assignment[(u, v)]
            return False

        if place(0):
            return found
        return None

    if exhaustive:
        label_order = list(range(q, 0, -1))
        try:
            found = attempt(label_order, node_limit)
        except _Budget:
            return SearchResult("budget", None, counter[0])
        if progress is not None:
            progress.write(f"nodes={counter[0]} best_colors={max_colors}\n")
        if found is not None:
            return SearchResult("found", EdgeLabeling(g, found), counter[0])
        return SearchResult("none", None, counter[0])

    # randomized restarts for larger graphs
    rng = random.Random(seed)
    restart_cap = max(1000, node_limit // 64)
    while counter[0] < node_limit:
        label_order = list(range(1, q + 1))
        rng.shuffle(label_order)
        cap = min(node_limit, counter[0] + restart_cap)
        try:
            found = attempt(label_order, cap)
        except _Budget:
            continue
        if found is not None:
            if progress is not None:
                progress.write(f"nodes={counter[0]} best_colors={max_colors}\n")
            return SearchResult("found", EdgeLabeling(g, found), counter[0])
        # full restart tree exhausted without budget: proven none
        return SearchResult("none", None, counter[0])
    return SearchResult("budget", None, counter[0])


def chi_la_exact(g, limit=CHI_LA_EDGE_LIMIT):
    """Minimum color count over all local antimagic labelings, by exhaustion."""
    if g.size > limit:
        raise SizeLimitError(f"{g.size} edges exceeds exhaustive limit {limit}")
    lower = chromatic_number(g)
    for t in range(lower, g.order + 1):
        result = search_local_antimagic(g, t, node_limit=10 ** 9)
        if result.status == "found":
            return t
        assert result.proven_none
    raise NotApplicableError("graph admits no local antimagic labeling")
