"""Exact decisions: (L,b)-colorability and (a,b,c)-choosability by search.

Choosability is decided by enumerating list assignments up to color
relabeling (trace multisets) and checking each instance.  Instances on
annotated cycles and paths run through a bitmask DP over "shadows": after
choosing phi at position i, later positions only see phi(i) & L(i+1), and
among achievable shadows only the inclusion-minimal ones matter.  Everything
else falls back to a memoized backtracking solver that splits the uncolored
subgraph into components.

The search-space reduction used by decide_choosable: a color whose trace
induces a disconnected subgraph can be split into one fresh color per
component without changing colorability, list sizes, edge intersections, or
amplitude sums (each coloring maps bijectively across the split).  So the
choosability scan may restrict itself to connected traces.  The public
enumerate_canonical keeps full generality (connected_only=False) since its
contract is "every multiset"; decide_choosable passes connected_only=True.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph
from .lists import BColoring, ListAssignment, TraceMultiset, realize

__all__ = [
    "BudgetExceeded",
    "SolveOutcome",
    "color_with_lists",
    "free_color_with_lists",
    "enumerate_canonical",
    "decide_choosable",
    "compute_sep",
]


class BudgetExceeded(Exception):
    """Search gave up; the verdict is unknown, not negative."""

    def __init__(self, nodes_explored: int):
        super().__init__(f"search budget exhausted after {nodes_explored} nodes")
        self.nodes_explored = nodes_explored


@dataclass(frozen=True)
class SolveOutcome:
    colorable: bool
    witness: BColoring | None = None
    counterexample: ListAssignment | None = None
    nodes_explored: int = 0


@lru_cache(maxsize=1 << 18)
def _ksubsets(mask: int, k: int) -> tuple[int, ...]:
    bits = [1 << i for i in range(mask.bit_length()) if (mask >> i) & 1]
    if k > len(bits):
        return ()
    return tuple(sum(c) for c in itertools.combinations(bits, k))


def _advance(states, mask_i: int, next_mask: int, b: int):
    """Minimal achievable shadows on the next position.

    A shadow s blocks: choices at position i are b-subsets of mask_i & ~s,
    and the shadow passed on is the choice intersected with next_mask.  The
    smallest achievable shadow size is b minus what fits outside next_mask;
    every larger achievable shadow contains one of that size, so only those
    are kept.  An empty shadow dominates everything.
    """
    out = set()
    for s in states:
        avail = mask_i & ~s
        na = avail.bit_count()
        if na < b:
            continue
        inside = avail & next_mask
        jmin = b - (na - inside.bit_count())
        if jmin <= 0:
            return (0,)
        out.update(_ksubsets(inside, jmin))
    if not out:
        return ()
    kept = []
    for m in sorted(out, key=int.bit_count):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(kept)


def _path_colorable(masks, b: int) -> bool:
    n = len(masks)
    if all((masks[i] & ~masks[i + 1]).bit_count() >= b for i in range(n - 1)):
        if masks[-1].bit_count() >= b:
            return True
    if all((masks[i] & ~masks[i - 1]).bit_count() >= b for i in range(1, n)):
        if masks[0].bit_count() >= b:
            return True
    states = (0,)
    for i in range(n - 1):
        states = _advance(states, masks[i], masks[i + 1], b)
        if not states:
            return False
    return any((masks[-1] & ~s).bit_count() >= b for s in states)


def _cycle_colorable(masks, b: int) -> bool:
    n = len(masks)
    if all((masks[i] & ~masks[(i + 1) % n]).bit_count() >= b for i in range(n)):
        return True
    if all((masks[i] & ~masks[i - 1]).bit_count() >= b for i in range(n)):
        return True
    first = masks[0]
    if first.bit_count() < b:
        return False
    seen_pairs = set()
    for m0 in _ksubsets(first, b):
        pair = (m0 & masks[1], m0 & masks[n - 1])
        if pair in seen_pairs:
            continue
        seen_pairs.add(pair)
        states = (pair[0],)
        for i in range(1, n - 1):
            states = _advance(states, masks[i], masks[i + 1], b)
            if not states:
                break
        closing = pair[1]
        for s in states:
            if (masks[n - 1] & ~s & ~closing).bit_count() >= b:
                return True
    return False


def color_with_lists(L: ListAssignment, b: int, budget: int | None = None) -> SolveOutcome:
    """Decide (L,b)-colorability; the witness is the lexicographically least
    coloring under vertex order then color order.

    Backtracks over vertices in index order, always extending the smallest
    uncolored vertex; when the uncolored set falls apart the components are
    solved independently (their lex-least pieces assemble the global
    lex-least witness).  Dead subproblems are memoized by (component,
    colored boundary).  Components that happen to be paths or cycles get a
    fast non-constructive colorability check before any witness search.
    """
    if b < 1:
        raise ValueError("b must be positive")
    g = L.graph
    n = g.n
    if any(len(lst) < b for lst in L.lists):
        return SolveOutcome(colorable=False)
    if L.precolored is not None and len(L.lists[L.precolored]) != b:
        # phi(r) = L(r) is unsatisfiable at size b
        return SolveOutcome(colorable=False)
    adj = g.adj
    universe = sorted(set().union(*L.lists))
    cidx = {c: i for i, c in enumerate(universe)}
    lmask = [sum(1 << cidx[c] for c in lst) for lst in L.lists]

    nodes = 0

    def bump():
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(nodes)

    phimask: dict[int, int] = {}
    fail_memo: set = set()

    def split(verts: frozenset) -> list[frozenset]:
        left = set(verts)
        comps = []
        while left:
            seed = min(left)
            comp = {seed}
            q = [seed]
            while q:
                u = q.pop()
                for w in adj[u]:
                    if w in left and w not in comp:
                        comp.add(w)
                        q.append(w)
            left -= comp
            comps.append(frozenset(comp))
        comps.sort(key=min)
        return comps

    def shape_of(comp_t):
        compset = set(comp_t)
        deg1 = []
        m = 0
        for v in comp_t:
            d = sum(1 for w in adj[v] if w in compset)
            m += d
            if d > 2:
                return None, None
            if d <= 1:
                deg1.append(v)
        m //= 2
        if not deg1 and m == len(comp_t) and len(comp_t) >= 3:
            start = comp_t[0]
        elif m == len(comp_t) - 1:
            start = min(deg1)
        else:
            return None, None
        order = [start]
        prev = None
        while len(order) < len(comp_t):
            nxt = [w for w in adj[order[-1]] if w in compset and w != prev]
            if not nxt:
                return None, None
            prev = order[-1]
            order.append(min(nxt))
        return ("path" if deg1 else "cycle"), order

    def solve(comp: frozenset) -> bool:
        comp_t = tuple(sorted(comp))
        boundary = []
        for v in comp_t:
            for u in adj[v]:
                if u not in comp and u in phimask:
                    boundary.append((u, phimask[u]))
        key = (comp_t, tuple(sorted(set(boundary))))
        if key in fail_memo:
            return False
        kind, order = shape_of(comp_t)
        if kind is not None:
            bump()
            eff = []
            for v in order:
                used = 0
                for u in adj[v]:
                    if u in phimask:
                        used |= phimask[u]
                eff.append(lmask[v] & ~used)
            ok = _path_colorable(eff, b) if kind == "path" else _cycle_colorable(eff, b)
            if not ok:
                fail_memo.add(key)
                return False
        v = comp_t[0]
        used = 0
        for u in adj[v]:
            if u in phimask:
                used |= phimask[u]
        avail = lmask[v] & ~used
        bits = [i for i in range(avail.bit_length()) if (avail >> i) & 1]
        rest = comp - {v}
        for cand in itertools.combinations(bits, b):
            bump()
            phimask[v] = sum(1 << i for i in cand)
            done = True
            for sub in split(rest) if rest else ():
                if not solve(sub):
                    done = False
                    break
            if done:
                return True
            for u in rest:
                phimask.pop(u, None)
            del phimask[v]
        fail_memo.add(key)
        return False

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 100))
    try:
        ok = all(solve(comp) for comp in split(frozenset(range(n))))
    except BudgetExceeded:
        raise
    finally:
        sys.setrecursionlimit(old_limit)
    if not ok:
        return SolveOutcome(colorable=False, nodes_explored=nodes)
    witness = tuple(
        frozenset(universe[i] for i in range(phimask[v].bit_length()) if (phimask[v] >> i) & 1)
        for v in range(n)
    )
    return SolveOutcome(colorable=True, witness=witness, nodes_explored=nodes)


def free_color_with_lists(L: ListAssignment, b: int, budget: int | None = None) -> SolveOutcome:
    """Same decision with one vertex precolored; |L(r)| = b makes phi(r) forced."""
    if L.precolored is None:
        raise ValueError("assignment has no precolored vertex")
    if len(L.lists[L.precolored]) != b:
        raise ValueError("precolored vertex must carry exactly b colors")
    return color_with_lists(L, b, budget=budget)


def _connected_subset(g: Graph, sub) -> bool:
    seen = {sub[0]}
    q = [sub[0]]
    inset = set(sub)
    while q:
        u = q.pop()
        for w in g.adj[u]:
            if w in inset and w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == len(sub)


def _trace_universe(g: Graph, connected_only: bool):
    """Candidate shared traces (size >= 2), densest first; singletons are slack."""
    edges = sorted(g.edges)
    eidx = {e: i for i, e in enumerate(edges)}
    traces = []
    for r in range(2, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if connected_only and not _connected_subset(g, sub):
                continue
            internal = [eidx[p] for p in itertools.combinations(sub, 2) if p in eidx]
            traces.append((sub, tuple(internal)))
    traces.sort(key=lambda t: (-len(t[0]), t[0]))
    return traces, len(edges)


def _enumerate_entries(g: Graph, cap, c: int, connected_only: bool):
    """Yield (shared, singles): shared = tuple of (trace, mult), singles = leftover
    per-vertex counts.  Multiplicities are chosen densest-trace-first and
    counted downward, so concentrated (adversarial) instances stream early.
    Yielded tuples are fresh objects, safe to hold."""
    traces, n_edges = _trace_universe(g, connected_only)
    rem_cap = list(cap)
    rem_edge = [c] * n_edges
    chosen: list[tuple[tuple[int, ...], int]] = []
    # explicit stack of per-level multiplicities: the universe can exceed the
    # interpreter's recursion depth on loose (disconnected-trace) enumerations
    ms: list[int] = []

    def set_level(i: int, m: int) -> None:
        if m:
            sub, internal = traces[i]
            for v in sub:
                rem_cap[v] -= m
            for e in internal:
                rem_edge[e] -= m
            chosen.append((sub, m))
        ms.append(m)

    def clear_level() -> int:
        m = ms.pop()
        if m:
            sub, internal = traces[len(ms)]
            for v in sub:
                rem_cap[v] += m
            for e in internal:
                rem_edge[e] += m
            chosen.pop()
        return m

    while True:
        while len(ms) < len(traces):
            sub, internal = traces[len(ms)]
            mmax = min(rem_cap[v] for v in sub)
            for e in internal:
                if rem_edge[e] < mmax:
                    mmax = rem_edge[e]
            set_level(len(ms), mmax)
        yield (tuple(chosen), tuple(rem_cap))
        while ms:
            m = clear_level()
            if m > 0:
                set_level(len(ms), m - 1)
                break
        else:
            return


def _entries_to_multiset(shared, singles) -> TraceMultiset:
    entries = {sub: m for sub, m in shared}
    for v, k in enumerate(singles):
        if k:
            entries[(v,)] = k
    return TraceMultiset(entries=tuple(sorted(entries.items())))


def enumerate_canonical(
    g: Graph,
    a: int,
    b: int,
    c: int,
    precolored: int | None = None,
    connected_only: bool = False,
):
    """Every list assignment up to color relabeling: per-vertex mass a (b at
    the precolored vertex), every edge's shared mass at most c."""
    if not (1 <= b <= a):
        raise ValueError("need 1 <= b <= a")
    if c < 0:
        raise ValueError("c must be >= 0")
    cap = [a] * g.n
    if precolored is not None:
        if not (0 <= precolored < g.n):
            raise ValueError("precolored vertex out of range")
        cap[precolored] = b
    for shared, singles in _enumerate_entries(g, cap, c, connected_only):
        yield _entries_to_multiset(shared, singles)


def _entries_to_masks(n: int, shared, singles):
    masks = [0] * n
    bit = 0
    for sub, m in shared:
        block = ((1 << m) - 1) << bit
        for v in sub:
            masks[v] |= block
        bit += m
    for v, k in enumerate(singles):
        if k:
            masks[v] |= ((1 << k) - 1) << bit
            bit += k
    return masks


def decide_choosable(
    g: Graph,
    a: int,
    b: int,
    c: int,
    free: bool = False,
    budget: int | None = None,
    use_symmetry: bool = True,
    connected_only: bool = True,
) -> SolveOutcome:
    """Is every c-separating assignment of a-lists (L,b)-colorable?

    free=True additionally quantifies over a precolored vertex (list size b
    there); on annotated cycles and paths one representative per vertex
    orbit suffices when use_symmetry is set.
    """
    if not (1 <= b <= a):
        raise ValueError("need 1 <= b <= a")
    if free:
        if g.cycle_order is not None and use_symmetry:
            roots: list[int | None] = [g.cycle_order[0]]
        elif g.path_order is not None and use_symmetry:
            half = (g.n + 1) // 2
            roots = list(g.path_order[:half])
        else:
            roots = list(range(g.n))
    else:
        roots = [None]

    nodes = 0
    for r in roots:
        cap = [a] * g.n
        if r is not None:
            cap[r] = b
        if g.cycle_order is not None:
            order = list(g.cycle_order)
            if r is not None:
                k = order.index(r)
                order = order[k:] + order[:k]
            kernel = _cycle_colorable
        elif g.path_order is not None:
            order = list(g.path_order)
            kernel = _path_colorable
        else:
            order = None
            kernel = None
        for shared, singles in _enumerate_entries(g, cap, c, connected_only):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(nodes)
            if kernel is not None:
                masks = _entries_to_masks(g.n, shared, singles)
                ok = kernel([masks[v] for v in order], b)
            else:
                cex = realize(_entries_to_multiset(shared, singles), g, a, precolored=r)
                out = color_with_lists(
                    cex, b, budget=None if budget is None else budget - nodes
                )
                nodes += out.nodes_explored
                ok = out.colorable
            if not ok:
                cex = realize(_entries_to_multiset(shared, singles), g, a, precolored=r)
                return SolveOutcome(colorable=False, counterexample=cex, nodes_explored=nodes)
    return SolveOutcome(colorable=True, nodes_explored=nodes)


def compute_sep(
    g: Graph,
    a: int,
    b: int,
    free: bool = False,
    budget: int | None = None,
    connected_only: bool = True,
) -> int:
    """Largest c in [0, a] such that g is (a,b,c)-choosable (free variant
    optional).  Scans c downward; choosability is monotone decreasing in c,
    so the first success is the answer."""
    if not (1 <= b <= a):
        raise ValueError("need 1 <= b <= a")
    spent = 0
    for c in range(a, -1, -1):
        try:
            out = decide_choosable(
                g, a, b, c,
                free=free,
                budget=None if budget is None else budget - spent,
                connected_only=connected_only,
            )
        except BudgetExceeded as e:
            raise BudgetExceeded(spent + e.nodes_explored) from None
        spent += out.nodes_explored
        if out.colorable:
            return c
    raise AssertionError("c = 0 must be choosable when a >= b")
