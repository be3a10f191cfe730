"""Counterexample list assignments, packaged as re-verifiable certificates.

Each generator materializes one uncolorable family at its exact threshold:
the lists are c-separating, sized to the (a, b, precolored) convention, and
engineered so the total color supply undershoots the demand b*|V|.  Block
layouts are deterministic: color ids are allocated left to right through the
construction (shared blocks first, fresh blocks as encountered), and every
free choice takes the lexicographically smallest option, so certificates
are byte-stable.

Generators raise on out-of-regime parameters instead of clamping: each
layout's uncolorability argument is regime-bound, and a clamped instance
would carry an unverifiable claim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .formulas import c_threshold, fsep_cycle
from .graphs import Graph, build_cycle, build_flower, build_path, graph_from_json_dict, identify_vertices
from .lists import ColorSet, ListAssignment, assignment_unchecked, separation
from .solver import color_with_lists

__all__ = [
    "Certificate",
    "gen_sep_small_ratio",
    "gen_sep_odd_cycle",
    "gen_path_family",
    "gen_c3_family",
    "gen_flower",
    "fig1_fixture",
    "glue_path_to_cycle",
    "claimed_sigma",
    "verify_certificate",
    "cert_to_json_dict",
    "cert_from_json_dict",
]


@dataclass(frozen=True)
class Certificate:
    graph: Graph
    a: int
    b: int
    c: int
    assignment: ListAssignment
    claim: str  # "uncolorable" | "colorable"
    family: str

    @property
    def precolored(self) -> int | None:
        return self.assignment.precolored


class _Alloc:
    """Hands out consecutive color ids in construction order."""

    def __init__(self, start: int = 0):
        self.next = start

    def fresh(self, count: int) -> tuple[int, ...]:
        if count < 0:
            raise ValueError(f"block size went negative ({count}): out of regime")
        block = tuple(range(self.next, self.next + count))
        self.next += count
        return block


def _fset(*parts) -> ColorSet:
    out = set()
    for p in parts:
        out.update(p)
    return frozenset(out)


def gen_sep_small_ratio(n: int, b: int, k: int) -> Certificate:
    """Cycle family for a = b+k with k < b: one globally shared color, k-blocks
    shared along each edge, private filler.  Separation is exactly k+1 and the
    supply count floor(n/2) + n(b-1) falls short of nb."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    if not (0 <= k < b):
        raise ValueError(f"need 0 <= k < b, got k={k}, b={b}")
    a = b + k
    alloc = _Alloc()
    C = alloc.fresh(1)
    D = [alloc.fresh(k) for _ in range(n)]
    F = [alloc.fresh(b - k - 1) for _ in range(n)]
    lists = tuple(_fset(C, D[i], D[(i + 1) % n], F[i]) for i in range(n))
    g = build_cycle(n)
    L = ListAssignment(graph=g, lists=lists, a=a)
    return Certificate(graph=g, a=a, b=b, c=k + 1, assignment=L, claim="uncolorable", family="cycle-small-ratio")


def gen_sep_odd_cycle(p: int, b: int, alpha: int) -> Certificate:
    """Odd cycle C_{2p+1} at a = 2b+alpha: a large all-shared block C plus
    edge-shared blocks D_i sized to leave total supply nb-1."""
    if p < 1:
        raise ValueError("need p >= 1")
    if alpha < 0 or p * alpha > b - 1:
        raise ValueError(f"need 0 <= alpha and p*alpha <= b-1, got p={p}, b={b}, alpha={alpha}")
    n = 2 * p + 1
    a = 2 * b + alpha
    alloc = _Alloc()
    C = alloc.fresh(n * alpha + 2)
    D = [alloc.fresh(b - p * alpha - 1) for _ in range(n)]
    lists = tuple(_fset(C, D[i], D[(i + 1) % n]) for i in range(n))
    g = build_cycle(n)
    L = ListAssignment(graph=g, lists=lists, a=a)
    c = b + (p + 1) * alpha + 1
    return Certificate(graph=g, a=a, b=b, c=c, assignment=L, claim="uncolorable", family="cycle-odd-saturated")


def _path_c(n: int, a: int, b: int) -> int:
    return c_threshold(n, a, b).floor + 1


def gen_path_family(n: int, a: int, b: int, variant: str, endpoints: str = "equal") -> Certificate:
    """Uncolorable path P_{n+1} with b-sized pinned end lists, one unit above
    the colorable threshold.

    variant picks the box layout: case1 in the low regime (chained a-c fresh
    blocks), case2a in the middle regime when a >= 2c (the whole end block
    re-enters the second list), case2b for the knife-edge a = 2c-1 (rows
    alternate c / c-1 overlaps).  endpoints: "equal" reuses the left b-block
    on the right, "disjoint" pins b new colors; both give the same total
    supply.
    """
    if n < 4:
        raise ValueError("need n >= 4; the n = 3 layout is not claimed tight")
    if not (1 <= b <= a):
        raise ValueError("need 1 <= b <= a")
    if endpoints not in ("equal", "disjoint"):
        raise ValueError(f"unknown endpoints mode {endpoints!r}")
    t = c_threshold(n, a, b)
    c = t.floor + 1
    alloc = _Alloc()
    B = alloc.fresh(b)
    rows: list[ColorSet] = [frozenset(B)]

    if variant == "case1":
        if t.regime != "low":
            raise ValueError(f"case1 needs the low regime, got {t.regime}")
        if a < 2 * c:
            raise ValueError(f"case1 layout needs a >= 2c (a={a}, c={c})")
        if c > b:
            raise AssertionError("low regime guarantees c <= b")
        prev = alloc.fresh(a - c)
        rows.append(_fset(B[:c], prev))
        for _ in range(3, n):
            cur = alloc.fresh(a - c)
            rows.append(_fset(prev[-c:], cur))
            prev = cur
        Bp = B if endpoints == "equal" else alloc.fresh(b)
        rows.append(_fset(Bp[:c], prev[-c:], alloc.fresh(a - 2 * c)))
        rows.append(frozenset(Bp))
    elif variant == "case2a":
        if t.regime != "middle":
            raise ValueError(f"case2a needs the middle regime, got {t.regime}")
        if a < 2 * c:
            raise ValueError(f"case2a needs a >= 2c (a={a}, c={c}); try case2b")
        prev = alloc.fresh(a - b)
        rows.append(_fset(B, prev))
        for _ in range(3, n):
            cur = alloc.fresh(a - c)
            rows.append(_fset(prev[-c:], cur))
            prev = cur
        Bp = B if endpoints == "equal" else alloc.fresh(b)
        rows.append(_fset(Bp, prev[-c:], alloc.fresh(a - c - b)))
        rows.append(frozenset(Bp))
    elif variant == "case2b":
        if t.regime != "middle":
            raise ValueError(f"case2b needs the middle regime, got {t.regime}")
        if a != 2 * c - 1:
            raise ValueError(f"case2b needs a = 2c-1 exactly (a={a}, c={c})")
        if c < b + 1:
            raise AssertionError("middle regime guarantees c >= b+1")
        prev = alloc.fresh(2 * c - b - 1)
        rows.append(_fset(B, prev))
        for i in range(3, n):
            if i % 2 == 1:
                cur = alloc.fresh(c - 1)
                rows.append(_fset(prev[-c:], cur))
            else:
                cur = alloc.fresh(c)
                rows.append(_fset(prev[-(c - 1):], cur))
            prev = cur
        Bp = B if endpoints == "equal" else alloc.fresh(b)
        if n % 2 == 1:
            rows.append(_fset(Bp, prev[-c:], alloc.fresh(c - b - 1)))
        else:
            rows.append(_fset(Bp, prev[-(c - 1):], alloc.fresh(c - b)))
        rows.append(frozenset(Bp))
    else:
        raise ValueError(f"unknown variant {variant!r}")

    g = build_path(n + 1)
    L = ListAssignment(graph=g, lists=tuple(rows), a=a)
    return Certificate(graph=g, a=a, b=b, c=c, assignment=L, claim="uncolorable", family=f"path-{variant}")


def gen_c3_family(a: int, b: int, variant: str) -> Certificate:
    """Uncolorable triangle with x1 pinned to a b-list, one above threshold.

    case1 (a < 7b/4): c = floor(2(a-b)/3)+1; the third list reuses
    t = min(b-c, c) end colors of the pinned block and s = min(c, a-c) head
    colors of the fresh block, which keeps every edge at most c even in the
    b > 2c corner where the naive t = b-c overflows.  case2 (7b/4 <= a < 3b):
    c = 2a-3b+1, with the high layout (a >= 2b) re-entering the whole pinned
    block and the low layout (a < 2b) splitting it.
    """
    if not (1 <= b <= a):
        raise ValueError("need 1 <= b <= a")
    alloc = _Alloc()
    B = alloc.fresh(b)
    if variant == "case1":
        if not 4 * a < 7 * b:
            raise ValueError(f"case1 needs a < 7b/4, got a={a}, b={b}")
        c = (2 * (a - b)) // 3 + 1
        A = alloc.fresh(a - c)
        t = min(b - c, c)
        s = min(c, a - c)
        l3 = _fset(B[b - t:], A[:s], alloc.fresh(a - t - s))
        lists = (frozenset(B), _fset(B[:c], A), l3)
    elif variant == "case2_high":
        if not (7 * b <= 4 * a and a < 3 * b and a >= 2 * b):
            raise ValueError(f"case2_high needs 7b/4 <= a < 3b and a >= 2b, got a={a}, b={b}")
        c = 2 * a - 3 * b + 1
        A = alloc.fresh(a - b)
        lists = (frozenset(B), _fset(B, A), _fset(B, A[: c - b], alloc.fresh(a - c)))
    elif variant == "case2_low":
        if not (7 * b <= 4 * a and a < 2 * b):
            raise ValueError(f"case2_low needs 7b/4 <= a < 2b, got a={a}, b={b}")
        c = 2 * a - 3 * b + 1
        A = alloc.fresh(a - c)
        lists = (frozenset(B), _fset(B[:c], A), _fset(B[c:], A[:c], alloc.fresh(a - b)))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    g = build_cycle(3)
    L = ListAssignment(graph=g, lists=lists, a=a, precolored=0)
    return Certificate(graph=g, a=a, b=b, c=c, assignment=L, claim="uncolorable", family=f"triangle-{variant.replace('_', '-')}")


def _pick_c3_variant(a: int, b: int) -> str:
    if 4 * a < 7 * b:
        return "case1"
    if a < 3 * b:
        return "case2_high" if a >= 2 * b else "case2_low"
    raise ValueError(f"no uncolorable triangle family at a >= 3b (a={a}, b={b})")


def _pick_path_variant(n: int, a: int, b: int) -> str:
    t = c_threshold(n, a, b)
    c = t.floor + 1
    if t.regime == "low":
        if a < 2 * c:
            raise ValueError(f"low-regime layout needs a >= 2c (n={n}, a={a}, b={b}, c={c})")
        return "case1"
    if t.regime == "middle":
        if a >= 2 * c:
            return "case2a"
        if a == 2 * c - 1:
            return "case2b"
        raise ValueError(f"middle regime with a <= 2c-2 has no layout (n={n}, a={a}, b={b}, c={c})")
    raise ValueError(f"no uncolorable path family in the high regime (n={n}, a={a}, b={b})")


def glue_path_to_cycle(cert: Certificate) -> Certificate:
    """Identify the two pinned path ends into one precolored cycle vertex.

    Needs equal end lists; the result is an uncolorable free instance on
    C_n whose pinned vertex carries the shared b-block.
    """
    g = cert.graph
    if g.path_order is None:
        raise ValueError("certificate is not a path instance")
    order = g.path_order
    lists = cert.assignment.lists
    if lists[order[0]] != lists[order[-1]]:
        raise ValueError("gluing needs equal end lists")
    n = g.n - 1
    cyc = build_cycle(n)
    new_lists = tuple(lists[order[i]] for i in range(n))
    L = ListAssignment(graph=cyc, lists=new_lists, a=cert.a, precolored=0)
    return Certificate(
        graph=cyc, a=cert.a, b=cert.b, c=cert.c, assignment=L,
        claim="uncolorable", family=cert.family + "+glued",
    )


def gen_flower(p: int, a: int, b: int) -> Certificate:
    """One cycle copy per b-subset of the hub list {1..a}, all sharing the hub.

    Copy i carries the pinned-cycle counterexample for hub choice B_i (the
    i-th b-subset in lexicographic order), with non-hub fresh colors drawn
    from a pool shared across copies.  Whatever b-set the hub takes, the
    matching copy cannot be completed, so the flower is uncolorable with no
    precoloring at all: its separation number meets its free one.
    """
    if p < 3:
        raise ValueError("cycle copies need p >= 3")
    if not (1 <= b <= a):
        raise ValueError("need 1 <= b <= a")
    c = fsep_cycle(p, a, b).value + 1
    if c > a:
        raise ValueError(f"pinned-cycle value equals a at (p={p}, a={a}, b={b}); no counterexample exists")
    if p == 3:
        inner = gen_c3_family(a, b, _pick_c3_variant(a, b))
        inner_order = (0, 1, 2)
    else:
        inner = glue_path_to_cycle(gen_path_family(p, a, b, _pick_path_variant(p, a, b), "equal"))
        inner_order = tuple(range(p))
    if inner.c != c:
        raise AssertionError("copy threshold disagrees with the pinned-cycle value")

    subsets = list(itertools.combinations(range(1, a + 1), b))
    k = len(subsets)
    g = build_flower(p, k)
    hub_list = frozenset(range(1, a + 1))
    lists = [hub_list] * g.n
    inner_lists = inner.assignment.lists
    for i, Bi in enumerate(subsets):
        def remap(color: int) -> int:
            # family ids: 0..b-1 is the pinned block, the rest is the shared fresh pool
            return Bi[color] if color < b else a + 1 + (color - b)

        for j in range(1, p):
            v = 1 + i * (p - 1) + (j - 1)
            lists[v] = frozenset(remap(x) for x in inner_lists[inner_order[j]])
    L = ListAssignment(graph=g, lists=tuple(lists), a=a)
    return Certificate(graph=g, a=a, b=b, c=c, assignment=L, claim="uncolorable", family="flower")


def fig1_fixture() -> Certificate:
    """The literal two-square cactus with 1-separating 2-lists and no
    (L,1)-coloring: hub {1,2}, one square listing {1,3},{3,4},{1,4}, the
    other {2,3},{3,4},{2,4}."""
    g = identify_vertices(build_cycle(4), 0, build_cycle(4), 0)
    raw = [{1, 2}, {1, 3}, {3, 4}, {1, 4}, {2, 3}, {3, 4}, {2, 4}]
    L = ListAssignment(graph=g, lists=tuple(frozenset(s) for s in raw), a=2)
    return Certificate(graph=g, a=2, b=1, c=1, assignment=L, claim="uncolorable", family="fig1")


def claimed_sigma(cert: Certificate) -> int | None:
    """The supply total each layout is engineered to undershoot, where a
    single whole-graph amplitude span exists (cycles, paths, triangles)."""
    n_g = cert.graph.n
    a, b, c = cert.a, cert.b, cert.c
    fam = cert.family
    if fam == "cycle-small-ratio":
        return n_g // 2 + n_g * (b - 1)
    if fam == "cycle-odd-saturated":
        return n_g * b - 1
    if fam == "path-case1":
        n = n_g - 1
        return (n - 1) * (a - c) + 2 * b - c
    if fam == "path-case2a":
        n = n_g - 1
        return (n - 1) * a - (n - 2) * c
    if fam == "path-case2b":
        n = n_g - 1
        return n * c - (n + 1) // 2 if n % 2 == 1 else n * c - n // 2
    if fam == "triangle-case1":
        t = min(b - c, c)
        s = min(c, a - c)
        return b + (a - c) + (a - t - s)
    if fam in ("triangle-case2-high", "triangle-case2-low"):
        return 2 * a - c
    return None


def verify_certificate(cert: Certificate, budget: int | None = None) -> tuple[bool, str]:
    """Re-check a certificate from scratch: list sizes, separation bound,
    and the claim against the exact solver."""
    L = cert.assignment
    if L.graph is not cert.graph and L.graph != cert.graph:
        return False, "assignment graph differs from certificate graph"
    ends = set()
    if cert.graph.path_order is not None and cert.graph.n >= 2:
        ends = {cert.graph.path_order[0], cert.graph.path_order[-1]}
    for v, lst in enumerate(L.lists):
        want = cert.b if (v == L.precolored or v in ends) else cert.a
        if len(lst) != want:
            return False, f"list at vertex {v} has size {len(lst)}, expected {want}"
    s = separation(L)
    if s > cert.c:
        return False, f"separation {s} exceeds claimed c={cert.c}"
    out = color_with_lists(L, cert.b, budget=budget)
    verdict = "colorable" if out.colorable else "uncolorable"
    if verdict != cert.claim:
        return False, f"solver says {verdict}, certificate claims {cert.claim}"
    return True, "ok"


def cert_to_json_dict(cert: Certificate) -> dict:
    d = {
        "graph": cert.graph.to_json_dict(),
        "a": cert.a,
        "b": cert.b,
        "c": cert.c,
        "lists": [sorted(lst) for lst in cert.assignment.lists],
        "claim": cert.claim,
        "family": cert.family,
    }
    if cert.precolored is not None:
        d["precolored"] = {"vertex": cert.precolored}
    return d


def cert_from_json_dict(d: dict) -> Certificate:
    g = graph_from_json_dict(d["graph"])
    pre = None
    if d.get("precolored") is not None:
        pre = int(d["precolored"]["vertex"])
    # structural load only, so size violations surface as verification
    # failures instead of parse errors
    L = assignment_unchecked(g, d["lists"], int(d["a"]), pre)
    return Certificate(
        graph=g, a=int(d["a"]), b=int(d["b"]), c=int(d["c"]),
        assignment=L, claim=d["claim"], family=d.get("family", "unknown"),
    )
