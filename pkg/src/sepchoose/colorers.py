"""Constructive coloring procedures with auditable decision traces.

Everything here colors by local rules rather than search: forward greedy on
cycles with enough slack, a discard-and-recurse lift that trades 2k list
colors for k coloring colors, pinned-path and pinned-cycle completion, and
block-by-block walks for cactuses and outerplanar graphs.  Each procedure
appends its per-vertex decisions to an optional ColoringPlan so a caller can
audit exactly which lists were inspected and in what order.

Free choices are always resolved lexicographically, so every procedure is
deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graphs import Graph, block_decomposition, build_cycle, build_path
from .lists import BColoring, ColorSet, ListAssignment, amplitude_violation, amplitude_sigma
from .solver import color_with_lists, free_color_with_lists

__all__ = [
    "ColoringPlan",
    "greedy_cycle",
    "lift_cycle",
    "path_color_precolored",
    "cycle_color_precolored",
    "cactus_free_color",
    "outerplanar_color",
]


@dataclass
class ColoringPlan:
    strategy: str
    steps: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)

    def record(self, vertex: int, colors: ColorSet) -> None:
        self.steps.append((vertex, tuple(sorted(colors))))

    def to_json_dict(self) -> dict:
        return {"strategy": self.strategy, "steps": [[v, list(cs)] for v, cs in self.steps]}


def _lex_least(pool: ColorSet, size: int) -> frozenset[int]:
    return frozenset(sorted(pool)[:size])


def greedy_cycle(L: ListAssignment, b: int, plan: ColoringPlan | None = None) -> BColoring:
    """Color a cycle by giving each vertex the lex-least b colors its forward
    neighbor cannot see.  Only the two lists at hand are ever inspected, so
    the trace doubles as a locality audit.  Works exactly when every vertex
    has b colors outside its forward neighbor's list."""
    g = L.graph
    if g.cycle_order is None:
        raise ValueError("greedy_cycle needs a cycle")
    order = g.cycle_order
    n = len(order)
    phi: dict[int, frozenset[int]] = {}
    for i, x in enumerate(order):
        nxt = order[(i + 1) % n]
        pool = L.lists[x] - L.lists[nxt]
        if len(pool) < b:
            raise ValueError(
                f"vertex {x} has only {len(pool)} colors unseen by its forward neighbor, needs {b}"
            )
        phi[x] = _lex_least(pool, b)
        if plan is not None:
            plan.record(x, phi[x])
    return tuple(phi[v] for v in range(g.n))


def lift_cycle(
    L: ListAssignment,
    b: int,
    k: int,
    base=None,
    plan: ColoringPlan | None = None,
) -> BColoring:
    """Color a cycle whose lists are 2k wider and k less separated than some
    colorable base setting, by handing out k forward-safe colors per vertex,
    discarding k more, and coloring the residue at the base parameters.

    L carries (a+2k)-lists with adjacent overlaps at most c+k; the result is
    a (b+k)-coloring.  b is the base amount.  The per-vertex discard set is
    forced to contain the forward neighbor's picks that appear in this list,
    then fills from the shared overlap, which drives every overlap down to c;
    both residual invariants are asserted at runtime.  base(L', b) colors the
    residue and defaults to the exact solver.
    """
    g = L.graph
    if g.cycle_order is None:
        raise ValueError("lift_cycle needs a cycle")
    if L.precolored is not None:
        raise ValueError("lifting a pinned instance is not supported")
    if k < 0:
        raise ValueError("need k >= 0")
    if base is None:
        base = _exact_base
    if k == 0:
        return base(L, b)
    order = g.cycle_order
    n = len(order)
    a_res = L.a - 2 * k
    if a_res < b:
        raise ValueError(f"lists too narrow to shed 2k colors (a={L.a}, k={k})")

    picks: dict[int, frozenset[int]] = {}
    for i, x in enumerate(order):
        nxt = order[(i + 1) % n]
        pool = L.lists[x] - L.lists[nxt]
        if len(pool) < k:
            raise ValueError(f"vertex {x} lacks k={k} colors unseen by its forward neighbor")
        picks[x] = _lex_least(pool, k)

    residual: list[ColorSet] = list(L.lists)
    for i, x in enumerate(order):
        nxt = order[(i + 1) % n]
        forced = L.lists[x] & picks[nxt]
        shared = (L.lists[x] & L.lists[nxt]) - forced
        discard = set(forced)
        for col in sorted(shared):
            if len(discard) >= k:
                break
            discard.add(col)
        keep = L.lists[x] - picks[x] - discard
        if len(keep) < a_res:
            raise ValueError(f"vertex {x}: residual list fell below {a_res} colors")
        residual[x] = _lex_least(keep, a_res)

    for u, v in g.edges:
        before = len(L.lists[u] & L.lists[v])
        after = len(residual[u] & residual[v])
        if after > max(before - k, 0):
            raise AssertionError(f"edge ({u},{v}): overlap {before} only fell to {after}")

    L_res = ListAssignment(graph=g, lists=tuple(residual), a=a_res)
    psi = base(L_res, b)
    out = []
    for v in range(g.n):
        if psi[v] & picks[v]:
            raise AssertionError(f"vertex {v}: base coloring reused a lifted pick")
        out.append(frozenset(psi[v] | picks[v]))
        if plan is not None:
            plan.record(v, out[v])
    return tuple(out)


def _exact_base(L: ListAssignment, b: int) -> BColoring:
    out = color_with_lists(L, b)
    if not out.colorable:
        raise ValueError("base instance is not colorable")
    return out.witness


def path_color_precolored(L: ListAssignment, b: int, plan: ColoringPlan | None = None) -> BColoring:
    """Color a path whose end lists may be pinned down to b colors.  On
    failure the error names a vertex span whose color supply cannot cover
    its demand, which for paths always exists."""
    g = L.graph
    if g.path_order is None:
        raise ValueError("path_color_precolored needs a path")
    out = color_with_lists(L, b)
    if out.colorable:
        if plan is not None:
            for v in g.path_order:
                plan.record(v, out.witness[v])
        return out.witness
    span = amplitude_violation(L, b)
    if span is None:
        raise AssertionError("uncolorable path with no deficient span")
    i, j = span
    have = amplitude_sigma(L, i, j)
    raise ValueError(
        f"no coloring: positions {i}..{j} of the path supply {have} colors, need {b * (j - i + 1)}"
    )


def cycle_color_precolored(L: ListAssignment, b: int, plan: ColoringPlan | None = None) -> BColoring:
    """Color a cycle with one vertex pinned to its whole b-list, by cutting
    the cycle at the pin and completing the resulting doubly-pinned path.
    Triangles go to the exact solver; a cut path of two edges says nothing."""
    g = L.graph
    if g.cycle_order is None:
        raise ValueError("cycle_color_precolored needs a cycle")
    r = L.precolored
    if r is None:
        raise ValueError("no pinned vertex")
    if g.n == 3:
        out = free_color_with_lists(L, b)
        if not out.colorable:
            raise ValueError("no coloring: the pinned triangle is uncolorable")
        if plan is not None:
            for v in range(3):
                plan.record(v, out.witness[v])
        return out.witness
    order = g.cycle_order
    idx = order.index(r)
    seq = order[idx:] + order[:idx]
    lists = [L.lists[v] for v in seq] + [L.lists[r]]
    pg = build_path(g.n + 1)
    pL = ListAssignment(graph=pg, lists=tuple(lists), a=L.a)
    psi = path_color_precolored(pL, b)
    phi = {v: psi[i] for i, v in enumerate(seq)}
    if plan is not None:
        for v in seq:
            plan.record(v, phi[v])
    return tuple(phi[v] for v in range(g.n))


def _cycle_order_in_block(edges: frozenset[tuple[int, int]], entry: int) -> list[int]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    walk = [entry]
    prev, cur = entry, min(adj[entry])
    while cur != entry:
        walk.append(cur)
        nbrs = [w for w in adj[cur] if w != prev]
        if len(nbrs) != 1:
            raise ValueError("block is not a simple cycle")
        prev, cur = cur, nbrs[0]
    return walk


def _walk_blocks(L: ListAssignment, b: int, color_block) -> BColoring:
    """BFS over the block tree from the pinned vertex, delegating each block
    to color_block(vertex_set, edges, entry, phi)."""
    g = L.graph
    r = L.precolored
    if r is None:
        raise ValueError("no pinned vertex")
    phi: dict[int, frozenset[int]] = {r: frozenset(L.lists[r])}
    if g.n == 1:
        return (phi[r],)
    bt = block_decomposition(g)
    vsets = [sorted({w for e in blk for w in e}) for blk in bt.blocks]
    by_vertex: dict[int, list[int]] = {}
    for bi, vs in enumerate(vsets):
        for v in vs:
            by_vertex.setdefault(v, []).append(bi)
    done: set[int] = set()
    queue = deque(by_vertex.get(r, []))
    while queue:
        bi = queue.popleft()
        if bi in done:
            continue
        done.add(bi)
        colored = [v for v in vsets[bi] if v in phi]
        if len(colored) != 1:
            raise AssertionError("block walk reached a block with != 1 colored vertex")
        color_block(vsets[bi], bt.blocks[bi], colored[0], phi)
        for v in vsets[bi]:
            queue.extend(bj for bj in by_vertex[v] if bj not in done)
    if len(phi) != g.n:
        raise ValueError("graph is not connected")
    return tuple(phi[v] for v in range(g.n))


def cactus_free_color(L: ListAssignment, b: int, plan: ColoringPlan | None = None) -> BColoring:
    """Color a cactus with one vertex pinned to its whole b-list by walking
    the block tree outward: bridges take the lex-least b colors their colored
    end cannot see, cycle blocks are completed as pinned cycles."""

    def color_block(vset, edges, entry, phi):
        if len(edges) == 1:
            (u, v), = edges
            other = v if u == entry else u
            pool = L.lists[other] - phi[entry]
            if len(pool) < b:
                raise ValueError(f"vertex {other}: only {len(pool)} colors avoid the colored end")
            phi[other] = _lex_least(pool, b)
            if plan is not None:
                plan.record(other, phi[other])
            return
        walk = _cycle_order_in_block(edges, entry)
        sub = build_cycle(len(walk))
        lists = [phi[entry]] + [L.lists[w] for w in walk[1:]]
        subL = ListAssignment(graph=sub, lists=tuple(lists), a=L.a, precolored=0)
        psi = cycle_color_precolored(subL, b)
        for i, w in enumerate(walk[1:], start=1):
            phi[w] = psi[i]
            if plan is not None:
                plan.record(w, phi[w])

    if plan is not None and L.precolored is not None:
        plan.record(L.precolored, L.lists[L.precolored])
    return _walk_blocks(L, b, color_block)


def outerplanar_color(L: ListAssignment, b: int, plan: ColoringPlan | None = None) -> BColoring:
    """Color an outerplanar graph with one pinned vertex, block by block.
    Within a 2-connected block the inner faces form a tree under shared
    edges; the face holding the entry vertex is completed as a pinned cycle
    and every further face as a path pinned at its shared edge."""
    g = L.graph
    if g.faces is None:
        raise ValueError("outerplanar coloring needs the inner faces")
    faces = [tuple(f) for f in g.faces]

    def face_edges(f):
        m = len(f)
        return {tuple(sorted((f[i], f[(i + 1) % m]))) for i in range(m)}

    def color_face_from_edge(f, u, w, phi):
        # complete f as a path from u around to w, avoiding the shared edge
        m = len(f)
        i, j = f.index(u), f.index(w)
        seq = [u]
        step = -1 if (i + 1) % m == j else 1
        t = (i + step) % m
        while t != j:
            seq.append(f[t])
            t = (t + step) % m
        seq.append(w)
        for x in seq[1:-1]:
            if x in phi:
                raise ValueError("inner faces do not form a tree")
        pg = build_path(len(seq))
        lists = [phi[u]] + [L.lists[x] for x in seq[1:-1]] + [phi[w]]
        pL = ListAssignment(graph=pg, lists=tuple(lists), a=L.a)
        psi = path_color_precolored(pL, b)
        for idx, x in enumerate(seq[1:-1], start=1):
            phi[x] = psi[idx]
            if plan is not None:
                plan.record(x, phi[x])

    def color_block(vset, edges, entry, phi):
        if len(edges) == 1:
            (u, v), = edges
            other = v if u == entry else u
            pool = L.lists[other] - phi[entry]
            if len(pool) < b:
                raise ValueError(f"vertex {other}: only {len(pool)} colors avoid the colored end")
            phi[other] = _lex_least(pool, b)
            if plan is not None:
                plan.record(other, phi[other])
            return
        vs = set(vset)
        local = [f for f in faces if set(f) <= vs]
        if not local:
            raise ValueError("a 2-connected block has no recorded face")
        root = min((fi for fi, f in enumerate(local) if entry in f), default=None)
        if root is None:
            raise ValueError("no face contains the block's entry vertex")
        f0 = local[root]
        sub = build_cycle(len(f0))
        idx = f0.index(entry)
        walk = f0[idx:] + f0[:idx]
        lists = [phi[entry]] + [L.lists[w] for w in walk[1:]]
        subL = ListAssignment(graph=sub, lists=tuple(lists), a=L.a, precolored=0)
        psi = cycle_color_precolored(subL, b)
        for i, w in enumerate(walk[1:], start=1):
            phi[w] = psi[i]
            if plan is not None:
                plan.record(w, phi[w])
        seen = {root}
        queue = deque([root])
        ecache = [face_edges(f) for f in local]
        while queue:
            fi = queue.popleft()
            for fj, f in enumerate(local):
                if fj in seen:
                    continue
                shared = ecache[fi] & ecache[fj]
                if not shared:
                    continue
                u, w = min(shared)
                color_face_from_edge(f, u, w, phi)
                seen.add(fj)
                queue.append(fj)
        if len(seen) != len(local):
            raise ValueError("the block's faces are not edge-connected")
        for v in vset:
            if v not in phi:
                raise ValueError(f"faces do not cover vertex {v}")

    if plan is not None and L.precolored is not None:
        plan.record(L.precolored, L.lists[L.precolored])
    return _walk_blocks(L, b, color_block)
