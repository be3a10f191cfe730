"""Small immutable graphs with the structural annotations used elsewhere.

Vertices are dense ints 0..n-1 and edges are unordered pairs stored as
(min, max) tuples.  A Graph may carry optional annotations recording how it
was built: a cycle order, a path order, a face list for outerplanar inputs,
and a block tree.  Annotations are trusted descriptions of structure that is
expensive or ambiguous to reconstruct; `block_decomposition` always computes
from scratch and is the ground truth for blocks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class BlockTree:
    """Biconnected components (as edge sets) plus the cut vertices."""

    blocks: tuple[frozenset[Edge], ...]
    cut_vertices: frozenset[int]

    def block_vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(itertools.chain.from_iterable(b)) for b in self.blocks)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    cycle_order: tuple[int, ...] | None = None
    path_order: tuple[int, ...] | None = None
    faces: tuple[tuple[int, ...], ...] | None = None
    # advisory: always recomputable via block_decomposition, so not compared
    blocks: BlockTree | None = field(default=None, compare=False)
    adj: tuple[frozenset[int], ...] = field(
        init=False, compare=False, repr=False, hash=False, default=()
    )

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if any(u == v for u, v in self.edges):
            raise ValueError("loops are not allowed")
        object.__setattr__(self, "edges", frozenset(_norm(u, v) for u, v in self.edges))
        nbr = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {e}")
            nbr[u].add(v)
            nbr[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbr))
        if self.cycle_order is not None:
            self._check_order(self.cycle_order, closed=True)
        if self.path_order is not None:
            self._check_order(self.path_order, closed=False)
        if self.faces is not None:
            self._check_faces()

    def _check_order(self, order: tuple[int, ...], closed: bool):
        if sorted(order) != list(range(self.n)):
            raise ValueError("order annotation must be a permutation of the vertices")
        pairs = [(order[i], order[i + 1]) for i in range(len(order) - 1)]
        if closed:
            if self.n < 3:
                raise ValueError("cycle order needs n >= 3")
            pairs.append((order[-1], order[0]))
        walked = {_norm(u, v) for u, v in pairs}
        if walked != self.edges:
            raise ValueError("order annotation inconsistent with edge set")

    def _check_faces(self):
        use = {}
        for f in self.faces:
            if len(f) < 3 or len(set(f)) != len(f):
                raise ValueError(f"bad face {f}")
            for i, u in enumerate(f):
                e = _norm(u, f[(i + 1) % len(f)])
                if e not in self.edges:
                    raise ValueError(f"face {f} uses non-edge {e}")
                use[e] = use.get(e, 0) + 1
        if any(c > 2 for c in use.values()):
            raise ValueError("an edge lies on more than two faces")

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def to_json_dict(self) -> dict:
        d = {"n": self.n, "edges": sorted(map(list, self.edges))}
        if self.faces is not None:
            d["faces"] = [list(f) for f in self.faces]
        if self.cycle_order is not None:
            d["cycle_order"] = list(self.cycle_order)
        if self.path_order is not None:
            d["path_order"] = list(self.path_order)
        return d


def graph_from_json_dict(d: dict) -> Graph:
    return Graph(
        n=int(d["n"]),
        edges=frozenset(_norm(int(u), int(v)) for u, v in d["edges"]),
        cycle_order=tuple(d["cycle_order"]) if "cycle_order" in d else None,
        path_order=tuple(d["path_order"]) if "path_order" in d else None,
        faces=tuple(tuple(f) for f in d["faces"]) if "faces" in d else None,
    )


def build_cycle(n: int) -> Graph:
    """Cycle on vertices 0..n-1 in natural order."""
    if n < 3:
        raise ValueError("cycles need n >= 3")
    edges = frozenset(_norm(i, (i + 1) % n) for i in range(n))
    order = tuple(range(n))
    return Graph(n=n, edges=edges, cycle_order=order,
                 blocks=BlockTree(blocks=(edges,), cut_vertices=frozenset()))


def build_path(n: int) -> Graph:
    """Path on vertices 0..n-1 in natural order."""
    if n < 1:
        raise ValueError("paths need n >= 1")
    edges = frozenset((i, i + 1) for i in range(n - 1))
    return Graph(n=n, edges=edges, path_order=tuple(range(n)))


def build_flower(p: int, k: int) -> Graph:
    """k cycles of length p glued at hub vertex 0; n = k*(p-1) + 1."""
    if p < 3:
        raise ValueError("petal cycles need p >= 3")
    if k < 1:
        raise ValueError("need at least one petal")
    edges = set()
    blocks = []
    for i in range(k):
        lo = 1 + i * (p - 1)
        ring = [0] + list(range(lo, lo + p - 1))
        block = frozenset(_norm(ring[j], ring[(j + 1) % p]) for j in range(p))
        blocks.append(block)
        edges |= block
    cuts = frozenset([0]) if k > 1 else frozenset()
    return Graph(n=k * (p - 1) + 1, edges=frozenset(edges),
                 blocks=BlockTree(blocks=tuple(blocks), cut_vertices=cuts))


def identify_vertices(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Disjoint union of g1 and g2 with v2 glued onto v1.

    g2's vertices are renumbered densely after g1's (v2 maps to v1).  Face
    lists survive when both sides have them; cycle and path orders do not
    describe the merged graph and are dropped.  Block trees are merged when
    both sides carry one.
    """
    if not (0 <= v1 < g1.n and 0 <= v2 < g2.n):
        raise ValueError("identification vertex out of range")

    remap = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == v2:
            remap[v] = v1
        else:
            remap[v] = nxt
            nxt += 1
    edges = set(g1.edges)
    for u, v in g2.edges:
        edges.add(_norm(remap[u], remap[v]))

    faces = None
    if g1.faces is not None and g2.faces is not None:
        faces = g1.faces + tuple(tuple(remap[v] for v in f) for f in g2.faces)

    blocks = None
    if g1.blocks is not None and g2.blocks is not None:
        bs = list(g1.blocks.blocks)
        for b in g2.blocks.blocks:
            bs.append(frozenset(_norm(remap[u], remap[v]) for u, v in b))
        cuts = set(g1.blocks.cut_vertices)
        cuts |= {remap[v] for v in g2.blocks.cut_vertices}
        if g1.edges and g2.edges:
            cuts.add(v1)
        blocks = BlockTree(blocks=tuple(bs), cut_vertices=frozenset(cuts))

    return Graph(n=nxt, edges=frozenset(edges), faces=faces, blocks=blocks)


def block_decomposition(g: Graph) -> BlockTree:
    """Biconnected components via iterative lowpoint DFS; connected input only."""
    seen = {0}
    q = [0]
    while q:
        u = q.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    if len(seen) != g.n:
        raise ValueError("block decomposition needs a connected graph")
    disc = [0] * g.n
    low = [0] * g.n
    timer = 1
    cuts = set()
    blocks = []
    estack: list[Edge] = []

    def flush_block(u: int, v: int):
        here = _norm(u, v)
        comp = set()
        while estack:
            e = estack.pop()
            comp.add(e)
            if e == here:
                break
        blocks.append(frozenset(comp))

    for root in range(g.n):
        if disc[root]:
            continue
        root_children = 0
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if not disc[w]:
                    estack.append(_norm(v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(_norm(v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # u separates v's subtree; the root case is settled below
                    if u != root:
                        cuts.add(u)
                    flush_block(u, v)
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=lambda b: sorted(b))
    return BlockTree(blocks=tuple(blocks), cut_vertices=frozenset(cuts))


def is_cactus(g: Graph) -> bool:
    """Every block is a single edge or an induced cycle."""
    for b in block_decomposition(g).blocks:
        if len(b) == 1:
            continue
        verts = set(itertools.chain.from_iterable(b))
        if len(b) != len(verts):
            return False
        deg = {v: 0 for v in verts}
        for u, v in b:
            deg[u] += 1
            deg[v] += 1
        if any(d != 2 for d in deg.values()):
            return False
    return True


def girth(g: Graph):
    """Length of a shortest cycle; math.inf for forests.

    BFS from every root; a non-tree edge (u,w) seen from root r witnesses a
    closed walk of length dist[u]+dist[w]+1 which contains a cycle no longer
    than that, and roots on a shortest cycle achieve equality.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        par = [-1] * g.n
        dist[root] = 0
        q = [root]
        head = 0
        while head < len(q):
            u = q[head]
            head += 1
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    q.append(w)
                elif par[u] != w and par[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3
    return best


def _cycle_lengths_of_cactus(bt: BlockTree) -> list[int]:
    out = []
    for b in bt.blocks:
        if len(b) >= 3:
            out.append(len(b))
    return sorted(out)


def _all_simple_cycle_lengths(g: Graph) -> set[int]:
    # desk-scale fallback for non-cactus inputs: rooted DFS enumeration,
    # each cycle found once from its smallest vertex
    lengths = set()

    def extend(path: list[int], seen: set[int]):
        v = path[-1]
        for w in sorted(g.adj[v]):
            if w == path[0] and len(path) >= 3:
                lengths.add(len(path))
            elif w > path[0] and w not in seen:
                path.append(w)
                seen.add(w)
                extend(path, seen)
                seen.discard(w)
                path.pop()

    for s in range(g.n):
        extend([s], {s})
    return lengths


def shortest_cycle_above_3(g: Graph) -> int | None:
    """Minimum cycle length >= 4, or None if every cycle is a triangle."""
    if is_cactus(g):
        lens = [l for l in _cycle_lengths_of_cactus(block_decomposition(g)) if l >= 4]
        return min(lens) if lens else None
    lens = [l for l in _all_simple_cycle_lengths(g) if l >= 4]
    return min(lens) if lens else None


def weak_dual(g: Graph) -> Graph:
    """Face-adjacency graph over the annotated face list.

    Faces are adjacent when they share at least one edge.  Raises unless the
    result is a tree, which is what the outerplanar machinery relies on.
    """
    if g.faces is None:
        raise ValueError("graph carries no face list")
    m = len(g.faces)
    face_edges = []
    for f in g.faces:
        face_edges.append({_norm(f[i], f[(i + 1) % len(f)]) for i in range(len(f))})
    dedges = set()
    for i in range(m):
        for j in range(i + 1, m):
            if face_edges[i] & face_edges[j]:
                dedges.add((i, j))
    if m > 1:
        if len(dedges) != m - 1:
            raise ValueError("weak dual is not a tree")
        # connectivity check
        adj = {i: set() for i in range(m)}
        for u, v in dedges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != m:
            raise ValueError("weak dual is not a tree")
    return Graph(n=m, edges=frozenset(dedges))
