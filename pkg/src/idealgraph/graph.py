"""Simple undirected graphs over ideal vertices, bitmask adjacency."""

from __future__ import annotations

from dataclasses import dataclass, field

from .ideals import IdealFamily


@dataclass(frozen=True)
class Graph:
    """Vertices 0..n-1; adj[v] is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] = field(default=())
    ideal_index: tuple[int, ...] = field(default=())  # vertex -> IdealFamily index

    def __post_init__(self):
        for v in range(self.n):
            if self.adj[v] >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            m = self.adj[v]
            while m:
                w = (m & -m).bit_length() - 1
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{w}")
                m &= m - 1

    @classmethod
    def from_edges(cls, n: int, edges, labels=()) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("no loops")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if not labels:
            labels = tuple(str(v) for v in range(n))
        return cls(n=n, adj=tuple(adj), labels=tuple(labels))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1) << (v + 1)
            while m:
                w = (m & -m).bit_length() - 1
                out.append((v, w))
                m &= m - 1
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "vertices": list(self.labels) if self.labels else [str(v) for v in range(self.n)],
            "edges": [[u, v] for u, v in self.edges()],
        }

    def to_dot(self, name: str = "gamma") -> str:
        lines = [f'graph "{name}" {{']
        for v in range(self.n):
            lines.append(f'  v{v} [label="{self.label(v)}"];')
        for u, v in self.edges():
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def ideal_label(elements) -> str:
    return "{" + ",".join(str(e) for e in elements) + "}"


def build_gamma(family: IdealFamily) -> Graph:
    """The intersection graph on the nontrivial left ideals."""
    verts = list(family.nontrivial)
    masks = [family.all[i].mask for i in verts]
    n = len(verts)
    zmask = family.zero_mask
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if (masks[a] & masks[b]) & ~zmask:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    labels = tuple(ideal_label(family.all[i].elements) for i in verts)
    return Graph(n=n, adj=tuple(adj), labels=labels, ideal_index=tuple(verts))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(n=g.n, adj=adj, labels=g.labels, ideal_index=g.ideal_index)


def induced_subgraph(g: Graph, vertices) -> Graph:
    verts = sorted(vertices)
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        m = g.adj[v]
        while m:
            w = (m & -m).bit_length() - 1
            if w in pos:
                adj[i] |= 1 << pos[w]
            m &= m - 1
    labels = tuple(g.label(v) for v in verts) if g.labels else ()
    idx = tuple(g.ideal_index[v] for v in verts) if g.ideal_index else ()
    return Graph(n=len(verts), adj=tuple(adj), labels=labels, ideal_index=idx)


@dataclass(frozen=True)
class QuotientGraph:
    """Quotient by closed-neighborhood equality N[u] = N[v]."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    graph: Graph  # one vertex per class, adjacency induced from the original


def quotient_graph(g: Graph) -> QuotientGraph:
    by_closed: dict[int, list[int]] = {}
    for v in range(g.n):
        by_closed.setdefault(g.adj[v] | (1 << v), []).append(v)
    classes = sorted(by_closed.values(), key=lambda c: c[0])
    class_of = [0] * g.n
    for i, cls in enumerate(classes):
        for v in cls:
            class_of[v] = i
    k = len(classes)
    adj = [0] * k
    for i in range(k):
        u = classes[i][0]
        for j in range(i + 1, k):
            if g.has_edge(u, classes[j][0]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(g.label(cls[0]) for cls in classes)
    q = Graph(n=k, adj=tuple(adj), labels=labels)
    return QuotientGraph(
        classes=tuple(tuple(c) for c in classes), class_of=tuple(class_of), graph=q
    )
