import math
import random

import pytest

from sepchoose import (
    ColoringPlan,
    ListAssignment,
    build_cycle,
    build_path,
    cactus_free_color,
    color_with_lists,
    cycle_color_precolored,
    fsep_cactus,
    fsep_outerplanar_bounds,
    gen_path_family,
    girth,
    glue_path_to_cycle,
    greedy_cycle,
    is_valid_coloring,
    lift_cycle,
    outerplanar_color,
    path_color_precolored,
    separation,
)
from helpers import random_cactus, random_cycle_lists, random_lists_sep, snake

F = frozenset


# --- greedy -----------------------------------------------------------------

def test_greedy_cycle_on_slack_instances():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(3, 7)
        a, b = 4, 2
        lists = random_cycle_lists(rng, n, a, a - b)
        L = ListAssignment(graph=build_cycle(n), lists=lists, a=a)
        plan = ColoringPlan("greedy")
        phi = greedy_cycle(L, b, plan)
        assert is_valid_coloring(L, phi, b)
        assert [v for v, _ in plan.steps] == list(L.graph.cycle_order)
        assert all(tuple(sorted(phi[v])) == cs for v, cs in plan.steps)


def test_greedy_cycle_starves_on_identical_lists():
    L = ListAssignment(graph=build_cycle(3), lists=(F({1, 2}),) * 3, a=2)
    with pytest.raises(ValueError, match="unseen by its forward neighbor"):
        greedy_cycle(L, 1)


def test_greedy_cycle_rejects_paths():
    L = ListAssignment(graph=build_path(3), lists=(F({1}), F({1, 2}), F({2})), a=2)
    with pytest.raises(ValueError, match="needs a cycle"):
        greedy_cycle(L, 1)


# --- lifting ----------------------------------------------------------------

def test_lift_cycle_random_instances():
    rng = random.Random(11)
    for n, a, c, k, b in [(3, 5, 4, 1, 1), (5, 7, 6, 1, 2), (3, 7, 5, 2, 1), (5, 9, 7, 2, 2)]:
        for _ in range(50):
            lists = random_cycle_lists(rng, n, a, c)
            L = ListAssignment(graph=build_cycle(n), lists=lists, a=a)
            phi = lift_cycle(L, b, k)
            assert is_valid_coloring(L, phi, b + k)


def test_lift_cycle_base_sees_reduced_instance():
    rng = random.Random(13)
    lists = random_cycle_lists(rng, 3, 5, 4)
    L = ListAssignment(graph=build_cycle(3), lists=lists, a=5)
    captured = {}

    def spy(L_res, b):
        captured["L"] = L_res
        out = color_with_lists(L_res, b)
        assert out.colorable
        return out.witness

    phi = lift_cycle(L, 1, 1, base=spy)
    assert is_valid_coloring(L, phi, 2)
    L_res = captured["L"]
    assert L_res.a == 3
    assert all(len(lst) == 3 for lst in L_res.lists)
    for u, v in L.graph.edges:
        before = len(L.lists[u] & L.lists[v])
        after = len(L_res.lists[u] & L_res.lists[v])
        assert after <= max(before - 1, 0)


def test_lift_cycle_zero_shift_delegates():
    rng = random.Random(19)
    lists = random_cycle_lists(rng, 4, 3, 2)
    L = ListAssignment(graph=build_cycle(4), lists=lists, a=3)
    assert lift_cycle(L, 1, 0) == color_with_lists(L, 1).witness


def test_lift_cycle_rejects_pinned_and_negative():
    lists = (F({1, 2}), F({3, 4}), F({5, 6}))
    L = ListAssignment(graph=build_cycle(3), lists=lists, a=2, precolored=0)
    with pytest.raises(ValueError, match="pinned"):
        lift_cycle(L, 1, 1)
    L = ListAssignment(graph=build_cycle(3), lists=lists, a=2)
    with pytest.raises(ValueError, match="k >= 0"):
        lift_cycle(L, 1, -1)


def test_lift_cycle_flags_base_reusing_picks():
    lists = (F({0, 1, 2, 3, 4}), F({1, 2, 3, 4, 5}), F({2, 3, 4, 5, 6}))
    L = ListAssignment(graph=build_cycle(3), lists=lists, a=5)
    # picks are 0, 1, 5; a base answer touching them must be rejected
    bad = lambda L_res, b: (F({0}), F({1}), F({5}))
    with pytest.raises(AssertionError, match="reused a lifted pick"):
        lift_cycle(L, 1, 1, base=bad)


# --- pinned paths and cycles ---------------------------------------------

def test_path_color_pinned_ends():
    g = build_path(4)
    L = ListAssignment(graph=g, lists=(F({5}), F({1, 2}), F({3, 4}), F({6})), a=2)
    plan = ColoringPlan("path")
    phi = path_color_precolored(L, 1, plan)
    assert is_valid_coloring(L, phi, 1)
    assert phi[0] == F({5}) and phi[3] == F({6})
    assert [v for v, _ in plan.steps] == [0, 1, 2, 3]


def test_path_color_failure_names_deficient_span():
    g = build_path(3)
    L = ListAssignment(graph=g, lists=(F({1}), F({1, 2}), F({2})), a=2)
    with pytest.raises(ValueError, match=r"positions 1\.\.3 of the path supply 2 colors, need 3"):
        path_color_precolored(L, 1)


def test_cycle_color_random_pinned_instances():
    rng = random.Random(7)
    for n, a, b, c in [(4, 9, 4, 3), (5, 9, 4, 4), (6, 5, 2, 3)]:
        for _ in range(60):
            g = build_cycle(n)
            pin = rng.randrange(n)
            lists = random_lists_sep(rng, g, a, c, pinned=pin, b=b)
            L = ListAssignment(graph=g, lists=lists, a=a, precolored=pin)
            phi = cycle_color_precolored(L, b)
            assert is_valid_coloring(L, phi, b)
            assert phi[L.precolored] == L.lists[L.precolored]


def test_cycle_color_triangle_goes_to_solver():
    L = ListAssignment(
        graph=build_cycle(3), lists=(F({1}), F({2, 3}), F({3, 4})), a=2, precolored=0
    )
    phi = cycle_color_precolored(L, 1)
    assert is_valid_coloring(L, phi, 1)
    bad = ListAssignment(
        graph=build_cycle(3), lists=(F({1}), F({1, 2}), F({1, 2})), a=2, precolored=0
    )
    with pytest.raises(ValueError, match="pinned triangle"):
        cycle_color_precolored(bad, 1)


def test_cycle_color_rejects_above_threshold():
    glued = glue_path_to_cycle(gen_path_family(4, 9, 4, "case1"))
    with pytest.raises(ValueError, match="no coloring"):
        cycle_color_precolored(glued.assignment, 4)


# --- cactuses ----------------------------------------------------------------

def test_cactus_free_color_random():
    rng = random.Random(31)
    a, b = 5, 2
    done = 0
    while done < 40:
        g = random_cactus(rng, rng.randint(4, 10))
        if girth(g) == math.inf:
            continue
        c = fsep_cactus(g, a, b).value
        pin = rng.randrange(g.n)
        lists = random_lists_sep(rng, g, a, c, pinned=pin, b=b)
        L = ListAssignment(graph=g, lists=lists, a=a, precolored=pin)
        plan = ColoringPlan("cactus")
        phi = cactus_free_color(L, b, plan)
        assert is_valid_coloring(L, phi, b)
        assert phi[L.precolored] == L.lists[L.precolored]
        assert sorted(v for v, _ in plan.steps) == list(range(g.n))
        done += 1


def test_cactus_free_color_bridge_starvation():
    g = build_path(2)
    L = ListAssignment(graph=g, lists=(F({1, 2}), F({1, 2})), a=2, precolored=0)
    with pytest.raises(ValueError, match="avoid the colored end"):
        cactus_free_color(L, 2)


# --- outerplanar -------------------------------------------------------------

def test_outerplanar_color_snakes():
    rng = random.Random(37)
    a, b = 9, 4
    for _ in range(25):
        g = snake(rng, rng.randint(2, 4), 5)
        c = fsep_outerplanar_bounds(5, a, b)[0].value
        pin = rng.randrange(g.n)
        lists = random_lists_sep(rng, g, a, c, pinned=pin, b=b)
        L = ListAssignment(graph=g, lists=lists, a=a, precolored=pin)
        plan = ColoringPlan("outerplanar")
        phi = outerplanar_color(L, b, plan)
        assert is_valid_coloring(L, phi, b)
        assert sorted(v for v, _ in plan.steps) == list(range(g.n))


def test_outerplanar_color_requires_faces():
    L = ListAssignment(
        graph=build_cycle(4), lists=(F({1}), F({1, 2}), F({2, 3}), F({3, 4})), a=2, precolored=0
    )
    with pytest.raises(ValueError, match="inner faces"):
        outerplanar_color(L, 1)


def test_plan_json_shape():
    plan = ColoringPlan("greedy")
    plan.record(0, F({2, 1}))
    d = plan.to_json_dict()
    assert d == {"strategy": "greedy", "steps": [[0, [1, 2]]]}
