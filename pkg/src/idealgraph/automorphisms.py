"""Graph automorphisms: exact group order, generators, and the induced
action of permutations of minimal ideals."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .graph import Graph
from .invariants import Budget, default_budget

AUT_VERTEX_CAP = 32


def _signatures(g: Graph) -> list[tuple]:
    """Degree plus sorted neighbor-degree multiset, per vertex (isomorphism invariant)."""
    degs = [g.degree(v) for v in range(g.n)]
    sigs = []
    for v in range(g.n):
        nbr = []
        m = g.adj[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            nbr.append(degs[w])
        sigs.append((degs[v], tuple(sorted(nbr))))
    return sigs


def _find_extension(g: Graph, forced: dict[int, int], budget: Budget) -> list[int] | None:
    """One automorphism consistent with the forced images, or None."""
    n = g.n
    adj = g.adj
    sigs = _signatures(g)
    perm = [-1] * n
    used = 0
    for v, w in forced.items():
        if sigs[v] != sigs[w] or used >> w & 1:
            return None
        perm[v] = w
        used |= 1 << w
    order = [v for v in range(n) if perm[v] < 0]

    def consistent(v: int, w: int) -> bool:
        for u in range(n):
            pu = perm[u]
            if pu < 0 or u == v:
                continue
            if (adj[v] >> u & 1) != (adj[w] >> pu & 1):
                return False
        return True

    for v, w in forced.items():
        if not consistent(v, w):
            return None

    def extend(i: int, used: int) -> bool:
        budget.check()
        if i == len(order):
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or sigs[v] != sigs[w]:
                continue
            if not consistent(v, w):
                continue
            perm[v] = w
            if extend(i + 1, used | (1 << w)):
                return True
            perm[v] = -1
        return False

    return perm if extend(0, used) else None


@dataclass(frozen=True)
class AutomorphismResult:
    generators: tuple[tuple[int, ...], ...]
    order: int
    orbit_partition: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def cycle_notation(self, perm: tuple[int, ...]) -> str:
        seen = [False] * len(perm)
        parts = []
        for v in range(len(perm)):
            if seen[v] or perm[v] == v:
                seen[v] = True
                continue
            cyc = []
            u = v
            while not seen[u]:
                seen[u] = True
                cyc.append(u)
                u = perm[u]
            names = [self.labels[x] if self.labels else str(x) for x in cyc]
            parts.append("(" + " ".join(names) + ")")
        return "".join(parts) if parts else "()"


def automorphism_group(g: Graph, budget: Budget | None = None) -> AutomorphismResult:
    """Exact automorphism group via a stabilizer chain over the vertex order.

    The order is the product of orbit sizes along the chain, so highly
    symmetric graphs do not require enumerating every automorphism.
    """
    if g.n > AUT_VERTEX_CAP:
        raise ValueError(f"automorphism search capped at {AUT_VERTEX_CAP} vertices")
    budget = default_budget(budget)
    n = g.n
    if n == 0:
        return AutomorphismResult(generators=(), order=1, orbit_partition=(), labels=g.labels)

    order = 1
    generators: list[list[int]] = []
    fixed: dict[int, int] = {}
    for b in range(n):
        orbit = 0
        for w in range(n):
            budget.check()
            if w == b:
                orbit += 1
                continue
            perm = _find_extension(g, {**fixed, b: w}, budget)
            if perm is not None:
                orbit += 1
                generators.append(perm)
        order *= orbit
        fixed[b] = b

    # orbit partition: union-find closure under the generators
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in generators:
        for v in range(n):
            a, c = find(v), find(perm[v])
            if a != c:
                parent[c] = a
    orbits: dict[int, list[int]] = {}
    for v in range(n):
        orbits.setdefault(find(v), []).append(v)
    partition = tuple(tuple(o) for o in sorted(orbits.values(), key=lambda o: o[0]))
    return AutomorphismResult(
        generators=tuple(tuple(p) for p in generators),
        order=order,
        orbit_partition=partition,
        labels=g.labels,
    )


def enumerate_automorphisms(g: Graph, budget: Budget | None = None, limit: int = 100_000):
    """Every automorphism, by pruned backtracking; for small groups only."""
    budget = default_budget(budget)
    n = g.n
    adj = g.adj
    sigs = _signatures(g)
    out: list[tuple[int, ...]] = []
    perm = [-1] * n

    def extend(v: int, used: int):
        budget.check()
        if v == n:
            out.append(tuple(perm))
            if len(out) > limit:
                raise ValueError("automorphism enumeration limit exceeded")
            return
        for w in range(n):
            if used >> w & 1 or sigs[v] != sigs[w]:
                continue
            ok = True
            for u in range(v):
                if (adj[v] >> u & 1) != (adj[w] >> perm[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            perm[v] = w
            extend(v + 1, used | (1 << w))
            perm[v] = -1

    extend(0, 0)
    return out


def count_automorphisms_unpruned(g: Graph, budget: Budget | None = None) -> int:
    """Oracle: test all |V|! permutations (use only for |V| <= 8)."""
    if g.n > 8:
        raise ValueError("unpruned enumeration is for |V| <= 8")
    budget = default_budget(budget)
    n = g.n
    adj = g.adj
    count = 0
    for perm in itertools.permutations(range(n)):
        budget.check()
        ok = True
        for v in range(n):
            for u in range(v + 1, n):
                if (adj[v] >> u & 1) != (adj[perm[v]] >> perm[u] & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# The induced action of a permutation of the minimal ideals


@dataclass(frozen=True)
class SigmaAction:
    sigma: tuple[int, ...]  # permutation of 0..n_min-1
    vertex_map: tuple[int, ...]


def _minset_index(family, g: Graph) -> dict[frozenset[int], int]:
    out = {}
    for v in range(g.n):
        mask = family.all[g.ideal_index[v]].mask
        out[family.contained_minimals(mask)] = v
    return out


def phi_sigma(family, g: Graph, sigma) -> SigmaAction:
    """Vertex permutation induced by permuting the minimal ideals by sigma.

    Defined when the semigroup is the union of its minimal ideals, so
    vertices correspond exactly to the proper nonempty unions.
    """
    if not family.s_equals_union:
        raise ValueError("phi_sigma needs the semigroup to be a union of minimal ideals")
    sigma = tuple(sigma)
    n = len(family.minimal)
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"sigma must be a permutation of 0..{n - 1}")
    by_minset = _minset_index(family, g)
    vmap = [0] * g.n
    for v in range(g.n):
        mask = family.all[g.ideal_index[v]].mask
        image = frozenset(sigma[i] for i in family.contained_minimals(mask))
        vmap[v] = by_minset[image]
    action = SigmaAction(sigma=sigma, vertex_map=tuple(vmap))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) != g.has_edge(vmap[u], vmap[v]):
                raise AssertionError("induced map failed to preserve adjacency")
    return action


def verify_symmetric_group(family, g: Graph, aut: AutomorphismResult,
                           budget: Budget | None = None) -> bool:
    """True iff Aut has order n! and every automorphism is induced by a
    permutation of the minimal ideals."""
    if not family.s_equals_union:
        raise ValueError("verification needs the semigroup to be a union of minimal ideals")
    n = len(family.minimal)
    if n < 2:
        raise ValueError("needs at least two minimal ideals")
    if aut.order != math.factorial(n):
        return False
    budget = default_budget(budget)
    by_minset = _minset_index(family, g)
    minimal_vertices = [by_minset[frozenset({i})] for i in range(n)]
    minimal_vertex_set = set(minimal_vertices)
    for perm in enumerate_automorphisms(g, budget=budget, limit=math.factorial(n)):
        sigma = [0] * n
        for i, v in enumerate(minimal_vertices):
            if perm[v] not in minimal_vertex_set:
                return False
            sigma[i] = minimal_vertices.index(perm[v])
        if phi_sigma(family, g, sigma).vertex_map != perm:
            return False
    return True
