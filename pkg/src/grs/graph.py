"""Simple undirected graphs on dense vertex ids 0..n-1.

A :class:`Graph` is an immutable value: two graphs with the same vertex
count and the same edge set compare (and hash) equal, so they can be used
as cache keys by the spectral routines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        norm = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
            norm.add((i, j) if i < j else (j, i))
        edges = tuple(sorted(norm))
        object.__setattr__(self, "edges", edges)
        adj = [[] for _ in range(self.n)]
        for i, j in edges:
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i] if 0 <= i < self.n else False

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``keep``, relabelled densely in ascending order.

        Returns the subgraph and the back-map (new id -> original id).
        """
        back = tuple(sorted(set(keep)))
        fwd = {v: i for i, v in enumerate(back)}
        sub = [(fwd[i], fwd[j]) for i, j in self.edges if i in fwd and j in fwd]
        return Graph(len(back), tuple(sub)), back

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.induced(v for v in range(self.n) if v not in drop)[0]

    def remove_edge(self, i: int, j: int) -> "Graph":
        e = (min(i, j), max(i, j))
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed to perm[v]."""
        return Graph(self.n, tuple((perm[i], perm[j]) for i, j in self.edges))


def from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, tuple(tuple(p) for p in pairs))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edges)
        offset += g.n
    return Graph(offset, tuple(edges))


# --- structure -------------------------------------------------------------


def _components(n, adj, skip=None):
    seen = [False] * n
    if skip is not None:
        seen[skip] = True
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
                    comp.append(y)
        comps.append(sorted(comp))
    return comps


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of connected components, ordered by smallest vertex."""
    return _components(g.n, g._adj)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def articulation_points(g: Graph) -> set[int]:
    """Cut-vertices of a connected graph (iterative low-link DFS)."""
    if not is_connected(g):
        raise ValueError("articulation_points requires a connected graph")
    n = g.n
    if n < 3:
        return set()
    disc = [-1] * n
    low = [0] * n
    cut = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # frames: (vertex, parent, neighbour iterator)
    stack = [(root, -1, iter(g.neighbors(root)))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(g.neighbors(w))))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent != -1:
            low[parent] = min(low[parent], low[v])
            if parent != root and low[v] >= disc[parent]:
                cut.add(parent)
    if root_children > 1:
        cut.add(root)
    return cut


@dataclass(frozen=True)
class ComponentSplit:
    removed: int
    components: tuple[tuple[Graph, tuple[int, ...]], ...]

    @property
    def graphs(self) -> list[Graph]:
        return [c for c, _ in self.components]

    def __len__(self):
        return len(self.components)


def remove_vertex_split(g: Graph, u: int) -> ComponentSplit:
    """Connected components of G - u with back-maps to the ids of ``g``."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range for n={g.n}")
    comps = _components(g.n, g._adj, skip=u)
    return ComponentSplit(u, tuple(g.induced(c) for c in comps))


# --- constructors ------------------------------------------------------------


def cone_attach(g1: Graph, attach: Iterable[int]) -> Graph:
    """Add a new vertex (id ``g1.n``) adjacent exactly to ``attach``."""
    s = sorted(set(attach))
    if not s:
        raise ValueError("attachment set must be nonempty")
    for v in s:
        if not 0 <= v < g1.n:
            raise ValueError(f"attachment vertex {v} out of range")
    u = g1.n
    return Graph(g1.n + 1, g1.edges + tuple((v, u) for v in s))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(k: int) -> Graph:
    """K_{1,k}: center 0 with k leaves."""
    if k < 0:
        raise ValueError("star needs k >= 0")
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def spider(a: int, b: int, c: int) -> Graph:
    """Center 0 with three legs of a, b and c further vertices."""
    if min(a, b, c) < 0:
        raise ValueError("spider legs must be non-negative")
    edges = []
    nxt = 1
    for leg in (a, b, c):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, tuple(edges))


def double_broom(k: int) -> Graph:
    """Path on k inner vertices with two pendants at each end vertex.

    ``double_broom(1)`` is K_{1,4}.
    """
    if k < 1:
        raise ValueError("double broom needs k >= 1")
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for end in (0, k - 1):
        for _ in range(2):
            edges.append((end, nxt))
            nxt += 1
    return Graph(nxt, tuple(edges))


def broom(n: int) -> Graph:
    """Path with two pendants at one end (Coxeter-Dynkin D_n, n >= 4 vertices)."""
    if n < 4:
        raise ValueError("broom needs n >= 4")
    edges = [(i, i + 1) for i in range(n - 3)]
    edges += [(n - 3, n - 2), (n - 3, n - 1)]
    return Graph(n, tuple(edges))


def join_at_new_vertex(parts: Sequence[tuple[Graph, Iterable[int]]]) -> Graph:
    """Disjoint copies of the given graphs plus a fresh vertex ``u``.

    ``u`` is the last vertex and is adjacent to each part's attachment set.
    """
    if not parts:
        raise ValueError("need at least one part")
    edges = []
    offset = 0
    attach = []
    for g, s in parts:
        s = sorted(set(s))
        if not s:
            raise ValueError("attachment sets must be nonempty")
        for v in s:
            if not 0 <= v < g.n:
                raise ValueError(f"attachment vertex {v} out of range")
        edges.extend((i + offset, j + offset) for i, j in g.edges)
        attach.extend(v + offset for v in s)
        offset += g.n
    u = offset
    edges.extend((v, u) for v in attach)
    return Graph(offset + 1, tuple(edges))


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "spider": spider,
    "double_broom": double_broom,
    "broom": broom,
    "join_at_new_vertex": join_at_new_vertex,
}


def generate(family: str, *params) -> Graph:
    try:
        fn = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return fn(*params)


def dot_export(g: Graph) -> str:
    lines = ["graph {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {i} -- {j};" for i, j in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
