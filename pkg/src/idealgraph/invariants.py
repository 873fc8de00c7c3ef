"""Exact graph invariants with per-invariant time budgets.

All searches are deterministic (vertices in index order, subsets in
lexicographic order by size) and either return an exact value or raise
BudgetExceededError; nothing is ever approximated.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from dataclasses import dataclass, field

from .graph import Graph, complement, quotient_graph

INF = math.inf

DEFAULT_BUDGET_MS = 10_000
BUDGET_ENV_VAR = "IDEALGRAPH_BUDGET_MS"


class BudgetExceededError(RuntimeError):
    """An exact search ran past its time budget and was aborted."""


class Budget:
    """Deadline checked inside search loops; check() is cheap enough to call often."""

    __slots__ = ("deadline", "_ticks")

    def __init__(self, ms: float | None = None):
        if ms is None:
            ms = float(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET_MS))
        self.deadline = time.monotonic() + ms / 1000.0
        self._ticks = 0

    def check(self):
        self._ticks += 1
        if self._ticks & 0x3FF:
            return
        if time.monotonic() > self.deadline:
            raise BudgetExceededError("exact search aborted: time budget exceeded")


def default_budget(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget()


# ---------------------------------------------------------------------------
# Distances and connectivity


def bfs_distances(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            m = g.adj[u]
            while m:
                v = (m & -m).bit_length() - 1
                if dist[v] < 0:
                    dist[v] = d
                    nxt.append(v)
                m &= m - 1
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def connectivity_and_diameter(g: Graph) -> tuple[int, float | int | None]:
    """(component count, diameter); diameter is None for the empty graph,
    0 for one vertex, inf when disconnected."""
    if g.n == 0:
        return 0, None
    seen = [False] * g.n
    components = 0
    diameter = 0
    for s in range(g.n):
        if seen[s]:
            continue
        components += 1
        dist = bfs_distances(g, s)
        for v, d in enumerate(dist):
            if d >= 0:
                seen[v] = True
    if components > 1:
        return components, INF
    for v in range(g.n):
        diameter = max(diameter, max(bfs_distances(g, v)))
    return 1, diameter


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return bfs_distances(g, 0).count(-1) == 0


def girth(g: Graph) -> float | int:
    """Length of the shortest cycle, inf when acyclic (BFS from every vertex)."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                m = g.adj[u]
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    if v == parent[u]:
                        continue
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    else:
                        best = min(best, dist[u] + dist[v] + 1)
            frontier = nxt
    return best


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            m = g.adj[u]
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


# ---------------------------------------------------------------------------
# Clique / coloring / independence


def clique_number(g: Graph, budget: Budget | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique (branch and bound with greedy coloring bounds)."""
    if g.n == 0:
        return 0, ()
    budget = default_budget(budget)
    adj = g.adj
    best: list[int] = []
    R: list[int] = []

    def expand(P: int):
        budget.check()
        # greedy coloring of P, ascending vertex index inside each class
        order: list[int] = []
        bounds: list[int] = []
        U = P
        color = 0
        while U:
            color += 1
            Q = U
            while Q:
                v = (Q & -Q).bit_length() - 1
                Q &= ~adj[v]
                Q &= ~(1 << v)
                U &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        cand = P
        for i in range(len(order) - 1, -1, -1):
            v = order[i]
            if len(R) + bounds[i] <= len(best):
                return
            R.append(v)
            newP = cand & adj[v]
            if newP:
                expand(newP)
            elif len(R) > len(best):
                best[:] = R
            R.pop()
            cand &= ~(1 << v)

    expand((1 << g.n) - 1)
    return len(best), tuple(sorted(best))


def chromatic_number(
    g: Graph, budget: Budget | None = None, clique: tuple[int, ...] | None = None
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number, searched upward from the clique number.

    Returns (chi, coloring) where coloring[v] is the color of vertex v.
    """
    if g.n == 0:
        return 0, ()
    budget = default_budget(budget)
    if clique is None:
        _, clique = clique_number(g, budget=budget)
    adj = g.adj
    # order: clique first, then remaining by degree descending, index ascending
    rest = [v for v in range(g.n) if v not in set(clique)]
    rest.sort(key=lambda v: (-adj[v].bit_count(), v))
    order = list(clique) + rest
    n = g.n

    def try_k(k: int) -> list[int] | None:
        colors = [-1] * n

        def assign(i: int, used: int) -> bool:
            budget.check()
            if i == n:
                return True
            v = order[i]
            forbidden = 0
            m = adj[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if colors[w] >= 0:
                    forbidden |= 1 << colors[w]
            limit = min(k, used + 1)  # new color classes in canonical order
            for c in range(limit):
                if forbidden >> c & 1:
                    continue
                colors[v] = c
                if assign(i + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
            return False

        return colors if assign(0, 0) else None

    k = max(len(clique), 1)
    while True:
        got = try_k(k)
        if got is not None:
            return k, tuple(got)
        k += 1


def independence_number(
    g: Graph, budget: Budget | None = None
) -> tuple[int, tuple[int, ...]]:
    """Maximum independent set = maximum clique of the complement."""
    return clique_number(complement(g), budget=budget)


# ---------------------------------------------------------------------------
# Domination


def greedy_dominating_set(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    covered = 0
    chosen = []
    while covered != full:
        best_v, best_gain = -1, -1
        for v in range(g.n):
            gain = ((g.adj[v] | (1 << v)) & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        covered |= g.adj[best_v] | (1 << best_v)
    return chosen


def domination_number(
    g: Graph, budget: Budget | None = None
) -> tuple[int, tuple[int, ...]]:
    if g.n == 0:
        raise ValueError("domination number needs at least one vertex")
    budget = default_budget(budget)
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    upper = len(greedy_dominating_set(g))
    for k in range(1, upper):
        for combo in itertools.combinations(range(g.n), k):
            budget.check()
            m = 0
            for v in combo:
                m |= closed[v]
            if m == full:
                return k, combo
    return upper, tuple(sorted(greedy_dominating_set(g)))


# ---------------------------------------------------------------------------
# Planarity


def is_planar(g: Graph) -> bool:
    """Exact planarity via networkx's linear-time planarity test."""
    if g.n <= 4 or g.edge_count() < 9:
        return True
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(G)
    return bool(ok)


# ---------------------------------------------------------------------------
# Perfectness (odd hole / odd antihole search)


def find_odd_hole(g: Graph, budget: Budget | None = None) -> tuple[int, ...] | None:
    """An induced odd cycle of length >= 5, or None; vertices in cycle order."""
    if g.n < 5:
        return None
    budget = default_budget(budget)
    adj = g.adj
    result: list[int] | None = None

    def search(s: int, path: list[int], pmask: int) -> tuple[int, ...] | None:
        budget.check()
        last = path[-1]
        mid = pmask & ~(1 << s) & ~(1 << last)
        cands = adj[last] & ~pmask
        # only vertices above the anchor so each cycle is rooted at its minimum
        cands &= ~((1 << (s + 1)) - 1)
        while cands:
            v = (cands & -cands).bit_length() - 1
            cands &= cands - 1
            if adj[v] & mid:
                continue  # chord to an interior path vertex
            if adj[v] >> s & 1:
                length = len(path) + 1
                if length >= 5 and length % 2 == 1:
                    return tuple(path + [v])
                continue  # closing edge exists: extending would leave a chord
            got = search(s, path + [v], pmask | (1 << v))
            if got:
                return got
        return None

    for s in range(g.n):
        m = adj[s] & ~((1 << (s + 1)) - 1)
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            got = search(s, [s, v], (1 << s) | (1 << v))
            if got:
                return got
    return None


def is_perfect(
    g: Graph, budget: Budget | None = None
) -> tuple[bool, dict | None]:
    """Strong-perfect-graph criterion: no odd hole in the graph or its complement."""
    budget = default_budget(budget)
    hole = find_odd_hole(g, budget=budget)
    if hole:
        return False, {"kind": "hole", "vertices": list(hole)}
    antihole = find_odd_hole(complement(g), budget=budget)
    if antihole:
        return False, {"kind": "antihole", "vertices": list(antihole)}
    return True, None


# ---------------------------------------------------------------------------
# Metric dimension


def metric_lower_bound(m: int, d: int) -> int:
    """Least k with k + d**k >= m (a diameter-based resolving-set bound)."""
    k = 1
    while k + d**k < m:
        k += 1
    return k


def metric_dimension(
    g: Graph, budget: Budget | None = None
) -> tuple[int, tuple[int, ...], int]:
    """(beta, witness resolving set, lower bound from order and diameter)."""
    if g.n < 2 or not is_connected(g):
        raise ValueError("metric dimension needs a connected graph with >= 2 vertices")
    budget = default_budget(budget)
    dist = distance_matrix(g)
    diam = max(max(row) for row in dist)
    lower = metric_lower_bound(g.n, diam) if diam >= 1 else 1
    for k in range(max(lower, 1), g.n):
        for combo in itertools.combinations(range(g.n), k):
            budget.check()
            seen = set()
            ok = True
            for v in range(g.n):
                sig = tuple(dist[v][w] for w in combo)
                if sig in seen:
                    ok = False
                    break
                seen.add(sig)
            if ok:
                return k, combo, lower
    return g.n - 1, tuple(range(g.n - 1)), lower


# ---------------------------------------------------------------------------
# Strong metric dimension

SDIM_BRUTE_CAP = 16


def strong_resolvers(g: Graph) -> dict[tuple[int, int], int]:
    """For each vertex pair, the bitmask of vertices that strongly resolve it."""
    dist = distance_matrix(g)
    out = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            m = 0
            duv = dist[u][v]
            for w in range(g.n):
                # v on a shortest u-w path, or u on a shortest v-w path
                if dist[u][w] == duv + dist[v][w] or dist[v][w] == duv + dist[u][w]:
                    m |= 1 << w
            out[(u, v)] = m
    return out


def strong_metric_dimension_bruteforce(
    g: Graph, budget: Budget | None = None
) -> tuple[int, tuple[int, ...]]:
    """Smallest set strongly resolving every pair, by subset search."""
    if g.n < 2 or not is_connected(g):
        raise ValueError("strong metric dimension needs a connected graph, >= 2 vertices")
    if g.n > SDIM_BRUTE_CAP:
        raise ValueError(f"brute force limited to {SDIM_BRUTE_CAP} vertices")
    budget = default_budget(budget)
    resolvers = list(strong_resolvers(g).values())
    for k in range(1, g.n):
        for combo in itertools.combinations(range(g.n), k):
            budget.check()
            m = 0
            for v in combo:
                m |= 1 << v
            if all(m & r for r in resolvers):
                return k, combo
    return g.n, tuple(range(g.n))


def strong_metric_dimension(g: Graph, budget: Budget | None = None) -> int:
    """|V| - omega of the closed-neighborhood quotient (valid for diameter <= 2),
    falling back to brute force on small graphs of larger diameter."""
    if g.n < 2 or not is_connected(g):
        raise ValueError("strong metric dimension needs a connected graph, >= 2 vertices")
    budget = default_budget(budget)
    _, diam = connectivity_and_diameter(g)
    if diam <= 2:
        q = quotient_graph(g)
        omega, _ = clique_number(q.graph, budget=budget)
        return g.n - omega
    if g.n <= SDIM_BRUTE_CAP:
        return strong_metric_dimension_bruteforce(g, budget=budget)[0]
    raise ValueError("no exact path: diameter > 2 and graph too large for brute force")


# ---------------------------------------------------------------------------
# Degrees and shape predicates


def degree_formula(n: int, k: int) -> int:
    """Vertex degree in the graph of a union of n minimal ideals, for a vertex
    that is the union of k of them."""
    return (2**k - 2) + (2 ** (n - k) - 2) + (2 ** (n - k) - 1) * (2**k - 2)


class DegreeFormulaMismatch(RuntimeError):
    pass


def degrees_and_eulerian(g: Graph, family=None) -> tuple[list[int], bool]:
    """Per-vertex degrees and the Eulerian predicate (connected, all degrees even).

    When the family is a union of its minimal ideals, every degree is
    cross-checked against the closed form.
    """
    degrees = [g.degree(v) for v in range(g.n)]
    eulerian = g.n > 0 and is_connected(g) and all(d % 2 == 0 for d in degrees)
    if family is not None and family.s_equals_union:
        n = len(family.minimal)
        for v in range(g.n):
            mask = family.all[g.ideal_index[v]].mask
            k = len(family.contained_minimals(mask))
            want = degree_formula(n, k)
            if degrees[v] != want:
                raise DegreeFormulaMismatch(
                    f"vertex {g.label(v)}: degree {degrees[v]}, closed form {want}"
                )
    return degrees, eulerian


def is_complete(g: Graph) -> bool:
    return g.n >= 1 and all(g.degree(v) == g.n - 1 for v in range(g.n))


def is_null(g: Graph) -> bool:
    return g.edge_count() == 0


def is_regular(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len({g.degree(v) for v in range(g.n)}) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count() == g.n - 1


def is_star(g: Graph) -> bool:
    """K_{1,m} with m >= 1."""
    return (
        g.n >= 2
        and is_tree(g)
        and max(g.degree(v) for v in range(g.n)) == g.n - 1
    )


# ---------------------------------------------------------------------------
# Report assembly


@dataclass
class InvariantReport:
    vertex_count: int
    edge_count: int
    connected: bool | None
    component_count: int
    diameter: float | int | None
    girth: float | int | None
    is_complete: bool | None
    is_null: bool | None
    is_regular: bool | None
    is_bipartite: bool | None
    is_tree: bool | None
    is_star: bool | None
    is_eulerian: bool | None
    degrees: list[int]
    clique_number: int | None
    chromatic_number: int | None
    independence_number: int | None
    domination_number: int | None
    metric_dimension: int | None
    metric_dimension_lower_bound: int | None
    strong_metric_dimension: int | None
    planar: bool | None
    perfect: bool | None
    automorphism_order: int | None = None
    witnesses: dict = field(default_factory=dict)
    aborted: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        def enc(v):
            if v is INF:
                return "inf"
            return v

        d = {
            "schema": 1,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "connected": self.connected,
            "component_count": self.component_count,
            "diameter": enc(self.diameter),
            "girth": enc(self.girth),
            "is_complete": self.is_complete,
            "is_null": self.is_null,
            "is_regular": self.is_regular,
            "is_bipartite": self.is_bipartite,
            "is_tree": self.is_tree,
            "is_star": self.is_star,
            "is_eulerian": self.is_eulerian,
            "degrees": self.degrees,
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
            "independence_number": self.independence_number,
            "domination_number": self.domination_number,
            "metric_dimension": self.metric_dimension,
            "metric_dimension_lower_bound": self.metric_dimension_lower_bound,
            "strong_metric_dimension": self.strong_metric_dimension,
            "planar": self.planar,
            "perfect": self.perfect,
            "automorphism_order": self.automorphism_order,
            "witnesses": self.witnesses,
            "aborted": self.aborted,
        }
        return d


def compute_report(
    g: Graph, family=None, budget_ms: float | None = None, with_automorphisms: bool = True
) -> InvariantReport:
    """Run every invariant on one graph; each gets its own time budget.

    Budget overruns land in report.aborted instead of producing values.
    """
    n = g.n
    witnesses: dict = {}
    aborted: list[str] = []

    def run(name, fn):
        try:
            return fn(Budget(budget_ms))
        except BudgetExceededError:
            aborted.append(name)
            return None

    if n == 0:
        return InvariantReport(
            vertex_count=0, edge_count=0, connected=None, component_count=0,
            diameter=None, girth=None, is_complete=None, is_null=None,
            is_regular=None, is_bipartite=None, is_tree=None, is_star=None,
            is_eulerian=None, degrees=[], clique_number=None,
            chromatic_number=None, independence_number=None,
            domination_number=None, metric_dimension=None,
            metric_dimension_lower_bound=None, strong_metric_dimension=None,
            planar=None, perfect=None, witnesses={}, aborted=[],
        )

    components, diameter = connectivity_and_diameter(g)
    connected = components == 1
    degrees, eulerian = degrees_and_eulerian(g)

    omega_witness = run("clique_number", lambda b: clique_number(g, budget=b))
    omega = None
    if omega_witness:
        omega, wclique = omega_witness
        witnesses["clique"] = list(wclique)

    chi = None
    if omega_witness:
        clique_hint = tuple(witnesses["clique"])
        chi_res = run(
            "chromatic_number",
            lambda b: chromatic_number(g, budget=b, clique=clique_hint),
        )
        if chi_res:
            chi, coloring = chi_res
            witnesses["coloring"] = list(coloring)

    alpha_res = run("independence_number", lambda b: independence_number(g, budget=b))
    alpha = None
    if alpha_res:
        alpha, wset = alpha_res
        witnesses["independent_set"] = list(wset)

    gamma_res = run("domination_number", lambda b: domination_number(g, budget=b))
    gamma = None
    if gamma_res:
        gamma, wdom = gamma_res
        witnesses["dominating_set"] = list(wdom)

    beta = beta_lower = None
    if connected and n >= 2:
        beta_res = run("metric_dimension", lambda b: metric_dimension(g, budget=b))
        if beta_res:
            beta, wres, beta_lower = beta_res
            witnesses["resolving_set"] = list(wres)

    sdim = None
    if connected and n >= 2:
        sdim = run("strong_metric_dimension", lambda b: strong_metric_dimension(g, budget=b))

    perfect_res = run("perfect", lambda b: is_perfect(g, budget=b))
    perfect = None
    if perfect_res:
        perfect, hole_witness = perfect_res
        if hole_witness:
            witnesses["imperfection"] = hole_witness

    aut_order = None
    if with_automorphisms and n <= 32:
        from .automorphisms import automorphism_group

        aut_res = run("automorphism_group", lambda b: automorphism_group(g, budget=b))
        if aut_res:
            aut_order = aut_res.order
            witnesses["automorphism_generators"] = [
                aut_res.cycle_notation(p) for p in aut_res.generators
            ]

    return InvariantReport(
        vertex_count=n,
        edge_count=g.edge_count(),
        connected=connected,
        component_count=components,
        diameter=diameter,
        girth=girth(g),
        is_complete=is_complete(g),
        is_null=is_null(g),
        is_regular=is_regular(g),
        is_bipartite=is_bipartite(g),
        is_tree=is_tree(g),
        is_star=is_star(g),
        is_eulerian=eulerian,
        degrees=degrees,
        clique_number=omega,
        chromatic_number=chi,
        independence_number=alpha,
        domination_number=gamma,
        metric_dimension=beta,
        metric_dimension_lower_bound=beta_lower,
        strong_metric_dimension=sdim,
        planar=is_planar(g),
        perfect=perfect,
        automorphism_order=aut_order,
        witnesses=witnesses,
        aborted=aborted,
    )
