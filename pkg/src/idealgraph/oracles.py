"""Slow, independent cross-checks for the fast invariant paths.

These deliberately share no code with the implementations they verify:
planarity is decided by exhaustive topological-subgraph search, and
perfectness by checking clique number against chromatic number on every
induced subgraph.
"""

from __future__ import annotations

import itertools

from .graph import Graph, induced_subgraph
from .invariants import Budget, chromatic_number, clique_number, default_budget

PLANARITY_ORACLE_CAP = 16


def _route_pairs(adj, pairs, blocked: int, budget: Budget) -> bool:
    """Internally-disjoint paths for every pair; interiors avoid blocked vertices."""
    if not pairs:
        return True
    (u, v), rest = pairs[0], pairs[1:]

    def walk(x: int, interior: int) -> bool:
        budget.check()
        if adj[x] >> v & 1:
            if _route_pairs(adj, rest, blocked | interior, budget):
                return True
        cand = adj[x] & ~blocked & ~interior
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if walk(w, interior | (1 << w)):
                return True
        return False

    return walk(u, 0)


_K5_PAIRS = [(a, b) for a in range(5) for b in range(a + 1, 5)]
_K33_PAIRS = [(a, 3 + b) for a in range(3) for b in range(3)]


def _k5_subdivision(g: Graph, budget: Budget) -> bool:
    # K5 is symmetric in its branch vertices: combinations suffice
    candidates = [v for v in range(g.n) if g.degree(v) >= 4]
    for combo in itertools.combinations(candidates, 5):
        budget.check()
        blocked = 0
        for v in combo:
            blocked |= 1 << v
        pairs = [(combo[a], combo[b]) for a, b in _K5_PAIRS]
        if _route_pairs(g.adj, pairs, blocked, budget):
            return True
    return False


def _k33_subdivision(g: Graph, budget: Budget) -> bool:
    candidates = [v for v in range(g.n) if g.degree(v) >= 3]
    for six in itertools.combinations(candidates, 6):
        blocked = 0
        for v in six:
            blocked |= 1 << v
        # all bipartitions of the six branch vertices into 3 + 3
        for left in itertools.combinations(range(1, 6), 2):
            budget.check()
            side_a = (0,) + left
            side_b = tuple(i for i in range(6) if i not in side_a)
            pairs = [(six[a], six[b]) for a in side_a for b in side_b]
            if _route_pairs(g.adj, pairs, blocked, budget):
                return True
    return False


def is_planar_oracle(g: Graph, budget: Budget | None = None) -> bool:
    """Kuratowski oracle: planar iff no K5 or K3,3 subdivision (|V| <= 16)."""
    if g.n > PLANARITY_ORACLE_CAP:
        raise ValueError(f"planarity oracle limited to {PLANARITY_ORACLE_CAP} vertices")
    if g.edge_count() < 9:
        return True  # a K3,3 subdivision needs 9 edges, a K5 subdivision 10
    budget = default_budget(budget)
    return not _k5_subdivision(g, budget) and not _k33_subdivision(g, budget)


def is_perfect_oracle(g: Graph, budget: Budget | None = None) -> bool:
    """Definition check: omega(H) == chi(H) for every induced subgraph H."""
    if g.n > 12:
        raise ValueError("perfectness oracle limited to 12 vertices")
    budget = default_budget(budget)
    verts = list(range(g.n))
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(verts, k):
            budget.check()
            h = induced_subgraph(g, combo)
            omega, _ = clique_number(h, budget=budget)
            chi, _ = chromatic_number(h, budget=budget)
            if omega != chi:
                return False
    return True
