"""Random instance builders shared across the test modules.

All builders take an explicit random.Random so failures replay exactly.
"""

from __future__ import annotations

from sepchoose import Graph, ListAssignment


def random_cycle_lists(rng, n, a, c, pinned_b=None, pool_size=None):
    """c-separating lists on C_n, all sized a (vertex 0 gets pinned_b if set).

    Draws lists around the cycle with a random overlap into the previous
    one, then rejects draws whose wrap-around edge exceeds c."""
    pool = range(pool_size or (4 * a + n))
    for _ in range(500):
        size0 = pinned_b if pinned_b is not None else a
        lists = [frozenset(rng.sample(pool, size0))]
        for _ in range(1, n):
            prev = lists[-1]
            o = rng.randint(0, min(c, len(prev), a))
            shared = rng.sample(sorted(prev), o)
            rest = rng.sample(sorted(set(pool) - prev), a - o)
            lists.append(frozenset(shared + rest))
        if len(lists[-1] & lists[0]) <= c:
            return tuple(lists)
    raise RuntimeError("rejection sampling stalled")


def random_lists_sep(rng, g, a, c, pinned=None, b=None, pool_size=None):
    """c-separating lists on an arbitrary graph, sized a (b at pinned)."""
    pool = sorted(range(pool_size or (6 * a + g.n)))
    for _ in range(800):
        lists = [None] * g.n
        ok = True
        for v in range(g.n):
            size = b if v == pinned else a
            for _ in range(60):
                cand = frozenset(rng.sample(pool, size))
                if all(lists[w] is None or len(cand & lists[w]) <= c for w in g.adj[v]):
                    lists[v] = cand
                    break
            else:
                ok = False
                break
        if ok:
            return tuple(lists)
    raise RuntimeError("rejection sampling stalled")


def random_cactus(rng, n_target):
    """Grow a cactus by attaching bridges and cycles at random vertices."""
    edges = set()
    n = 1
    while n < n_target:
        if rng.random() < 0.4 or n_target - n < 2:
            u = rng.randrange(n)
            edges.add((u, n))
            n += 1
        else:
            k = rng.randint(3, min(5, n_target - n + 1))
            u = rng.randrange(n)
            cyc = [u] + list(range(n, n + k - 1))
            for i in range(k):
                x, y = cyc[i], cyc[(i + 1) % k]
                edges.add((min(x, y), max(x, y)))
            n += k - 1
    return Graph(n=n, edges=frozenset(edges))


def snake(rng, faces_n, flen):
    """Chain of flen-gon faces, each glued to an earlier free edge.  The
    result is 2-connected outerplanar with girth flen."""
    faces = [tuple(range(flen))]
    edges = {tuple(sorted((i, (i + 1) % flen))) for i in range(flen)}
    free = set(edges)
    n = flen
    for _ in range(faces_n - 1):
        e = rng.choice(sorted(free))
        free.discard(e)
        fu, fw = e
        cyc = [fu] + list(range(n, n + flen - 2)) + [fw]
        for i in range(len(cyc) - 1):
            ne = tuple(sorted((cyc[i], cyc[i + 1])))
            edges.add(ne)
            free.add(ne)
        faces.append(tuple(cyc))
        n += flen - 2
    return Graph(n=n, edges=frozenset(edges), faces=tuple(faces))


def brute_force_colorable(L: ListAssignment, b: int) -> bool:
    """Reference decision by plain product enumeration, no pruning."""
    import itertools

    g = L.graph
    choices = []
    for v in range(g.n):
        pool = sorted(L.lists[v])
        if v == L.precolored:
            if len(pool) != b:
                return False
            choices.append([frozenset(pool)])
        else:
            if len(pool) < b:
                return False
            choices.append([frozenset(s) for s in itertools.combinations(pool, b)])
    for phi in itertools.product(*choices):
        if all(not (phi[u] & phi[v]) for u, v in g.edges):
            return True
    return False
