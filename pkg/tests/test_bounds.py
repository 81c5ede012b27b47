"""Chromatic number, odd girth, the product lower bound, and the search."""

import random

import numpy as np
import pytest

from antimagic import (
    Graph,
    chi_la_exact,
    chromatic_number,
    complete_bipartite,
    cycle,
    lexi_lower_bound,
    null,
    octahedron,
    odd_girth,
    prism,
    search_local_antimagic,
    verify,
)
from antimagic.errors import NotApplicableError, SizeLimitError


def path3():
    return Graph(3, ((0, 1), (1, 2)))


def test_chromatic_numbers():
    assert chromatic_number(null(4)) == 1
    assert chromatic_number(cycle(6)) == 2
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(prism(3)) == 3
    assert chromatic_number(octahedron()) == 3
    assert chromatic_number(complete_bipartite(3, 3)) == 2
    with pytest.raises(SizeLimitError):
        chromatic_number(null(100))


def test_odd_girth_examples():
    assert odd_girth(cycle(5)) == 5
    assert odd_girth(cycle(6)) is None
    assert odd_girth(prism(3)) == 3
    assert odd_girth(complete_bipartite(2, 3)) is None


def test_odd_girth_against_walk_oracle():
    # oracle: the shortest odd closed walk has the length of a shortest odd
    # cycle, so check diagonal entries of adjacency powers
    rng = random.Random(5)
    for _ in range(40):
        p = rng.randint(2, 8)
        edges = tuple(
            (u, v) for u in range(p) for v in range(u + 1, p) if rng.random() < 0.45
        )
        g = Graph(p, edges)
        a = np.array(g.adjacency_matrix(), dtype=object)
        power = a.copy()
        expected = None
        for k in range(2, p + 2):
            power = power @ a
            if k % 2 and np.trace(power) > 0:
                expected = k
                break
        assert odd_girth(g) == expected


def test_lexi_lower_bound_values():
    rep = lexi_lower_bound(prism(3), octahedron())
    assert (rep.chi_g, rep.chi_h, rep.odd_girth, rep.lower) == (3, 3, 3, 9)
    rep = lexi_lower_bound(cycle(5), cycle(3))
    assert rep.odd_girth == 5 and rep.lower == 2 * 3 + 2  # k=2, ceil(3/2)=2
    with pytest.raises(NotApplicableError):
        lexi_lower_bound(cycle(4), cycle(3))


def test_search_finds_small_witnesses():
    res = search_local_antimagic(prism(3), 3, node_limit=10 ** 7)
    assert res.status == "found"
    rep = verify(res.labeling)
    assert rep.is_local_antimagic and rep.color_count <= 3

    res = search_local_antimagic(octahedron(), 3, require_parity_balance=True,
                                 node_limit=10 ** 7)
    assert res.status == "found"
    rep = verify(res.labeling)
    assert rep.is_local_antimagic and rep.color_count <= 3 and rep.parity_balanced


def test_search_proves_absence():
    res = search_local_antimagic(cycle(3), 2)
    assert res.status == "none" and res.proven_none
    # parity balance is impossible at any odd-degree vertex: rejected upfront
    res = search_local_antimagic(prism(3), 3, require_parity_balance=True)
    assert res.status == "none" and res.nodes == 0


def test_search_budget_status():
    res = search_local_antimagic(cycle(17), 2, node_limit=2000)
    assert res.status == "budget"
    assert not res.proven_none


def test_search_determinism():
    a = search_local_antimagic(prism(3), 3, node_limit=10 ** 6, seed=3)
    b = search_local_antimagic(prism(3), 3, node_limit=10 ** 6, seed=3)
    assert a.status == b.status == "found"
    assert a.labeling.labels == b.labeling.labels


def test_chi_la_ground_truths():
    for g in (cycle(3), cycle(4), cycle(5), path3()):
        value = chi_la_exact(g)
        assert value == 3
        assert value >= chromatic_number(g)
    with pytest.raises(SizeLimitError):
        chi_la_exact(cycle(11))
