"""End-to-end acceptance gates.

Each test covers one commitment about the package as a whole and registers
a single [criterion N] PASS/FAIL line.  The bodies gather violations into
counters instead of asserting mid-loop so the line always states how much
evidence was examined.
"""

import random
import time

from conftest import register

from sepchoose import (
    ListAssignment,
    amplitude_condition,
    amplitude_sigma,
    build_cycle,
    build_path,
    cactus_free_color,
    claimed_sigma,
    color_with_lists,
    compute_sep,
    cycle_color_precolored,
    enumerate_canonical,
    fig1_fixture,
    fsep_cactus,
    fsep_cycle,
    fsep_min_with_triangle,
    fsep_monotone_check,
    gen_c3_family,
    gen_flower,
    gen_path_family,
    gen_sep_odd_cycle,
    gen_sep_small_ratio,
    glue_path_to_cycle,
    is_valid_coloring,
    lift_cycle,
    realize,
    sep_cycle,
    separation,
    verify_certificate,
)
from helpers import random_cycle_lists, random_lists_sep


def report(num: int, ok: bool, detail: str) -> None:
    line = f"[criterion {num}] {'PASS' if ok else 'FAIL'}: {detail}"
    register(line)
    assert ok, line


def test_criterion_1_formula_oracle_grid():
    t0 = time.time()
    cells = 0
    bad = []
    for n in range(3, 6):
        g = build_cycle(n)
        for b in (1, 2):
            for a in range(b, min(3 * b, 6) + 1):
                want = (sep_cycle(n, a, b).value, fsep_cycle(n, a, b).value)
                got = (compute_sep(g, a, b), compute_sep(g, a, b, free=True))
                cells += 1
                if got != want:
                    bad.append((n, a, b, got, want))
    elapsed = time.time() - t0
    # the one knife-edge cell gets spelled out on its own line
    c4 = compute_sep(build_cycle(4), 2, 1)
    register(f"[criterion 1] note: oracle puts sep(C4, a=2, b=1) at {c4}")
    ok = not bad and c4 == sep_cycle(4, 2, 1).value and c4 in (1, 2) and elapsed < 600
    report(1, ok, f"{cells} grid cells, {len(bad)} mismatches, {elapsed:.1f}s")


def test_criterion_2_odd_cycle_datapoints():
    t0 = time.time()
    # (n, a, b, sep value, lift split b = base + k, certificate parameters)
    points = [
        (3, 5, 2, 4, 1, 1, (1, 2, 1)),
        (3, 7, 3, 5, 1, 2, (1, 3, 1)),
        (5, 7, 3, 6, 2, 1, (2, 3, 1)),
        (5, 9, 4, 7, 2, 2, (2, 4, 1)),
    ]
    rng = random.Random(202)
    failures = 0
    colored = 0
    for n, a, b, val, base_b, k, (p, cb, alpha) in points:
        assert sep_cycle(n, a, b).value == val
        cert = gen_sep_odd_cycle(p, cb, alpha)
        okc, reason = verify_certificate(cert)
        if not (okc and cert.c == val + 1 and cert.graph.n == n):
            failures += 1
            continue
        for _ in range(1000):
            lists = random_cycle_lists(rng, n, a, val)
            L = ListAssignment(graph=build_cycle(n), lists=lists, a=a)
            phi = lift_cycle(L, base_b, k)
            colored += 1
            if not is_valid_coloring(L, phi, b):
                failures += 1
    elapsed = time.time() - t0
    ok = failures == 0 and elapsed < 300
    report(2, ok, f"4 datapoints, {colored} lifted colorings, {failures} failures, {elapsed:.1f}s")


def test_criterion_3_free_separation_datapoints():
    neg_times = []
    for n, variant, want in [(4, "case1", 3), (5, "case2b", 4)]:
        assert fsep_cycle(n, 9, 4).value == want
        glued = glue_path_to_cycle(gen_path_family(n, 9, 4, variant))
        assert glued.c == want + 1
        t0 = time.time()
        okc, reason = verify_certificate(glued)
        neg_times.append(time.time() - t0)
        assert okc, reason
    rng = random.Random(303)
    failures = 0
    for n, c in [(4, 3), (5, 4)]:
        g = build_cycle(n)
        for _ in range(10_000):
            pin = rng.randrange(n)
            lists = random_lists_sep(rng, g, 9, c, pinned=pin, b=4)
            L = ListAssignment(graph=g, lists=lists, a=9, precolored=pin)
            try:
                phi = cycle_color_precolored(L, 4)
            except ValueError:
                failures += 1
                continue
            if not is_valid_coloring(L, phi, 4):
                failures += 1
    ok = failures == 0 and max(neg_times) < 1.0
    report(
        3,
        ok,
        f"2 glued negatives ({max(neg_times) * 1000:.0f}ms worst), "
        f"20000 pinned colorings, {failures} failures",
    )


def _certificate_grid():
    certs = []
    for n in range(3, 9):
        for b in range(1, 5):
            for k in range(0, b):
                certs.append(gen_sep_small_ratio(n, b, k))
    for p in range(1, 4):
        for b in range(1, 5):
            for alpha in range(0, b):
                if p * alpha <= b - 1:
                    certs.append(gen_sep_odd_cycle(p, b, alpha))
    for n in range(4, 9):
        for b in range(1, 5):
            for a in range(b, 4 * b + 1):
                for variant in ("case1", "case2a", "case2b"):
                    for endpoints in ("equal", "disjoint"):
                        try:
                            certs.append(gen_path_family(n, a, b, variant, endpoints))
                        except ValueError:
                            break
    for b in range(1, 5):
        for a in range(b, 3 * b + 1):
            for variant in ("case1", "case2_high", "case2_low"):
                try:
                    certs.append(gen_c3_family(a, b, variant))
                except ValueError:
                    continue
    return certs


def test_criterion_4_certificate_suite():
    t0 = time.time()
    certs = _certificate_grid()
    flowers = []
    for p in range(3, 9):
        for b in range(1, 5):
            for a in range(b, 4 * b + 1):
                try:
                    flowers.append(gen_flower(p, a, b))
                except ValueError:
                    continue
    mismatches = 0
    sigma_checked = 0
    for cert in certs + flowers:
        okc, reason = verify_certificate(cert)
        if not okc or separation(cert.assignment) != cert.c:
            mismatches += 1
            continue
        want = claimed_sigma(cert)
        if want is not None:
            sigma_checked += 1
            if amplitude_sigma(cert.assignment, 1, cert.graph.n) != want:
                mismatches += 1
    families = {c.family.split("+")[0] for c in certs + flowers}
    elapsed = time.time() - t0
    ok = mismatches == 0 and len(families) >= 6
    report(
        4,
        ok,
        f"{len(certs)} certificates + {len(flowers)} flowers across {len(families)} families, "
        f"{sigma_checked} supply formulas checked, {mismatches} mismatches, {elapsed:.0f}s",
    )


def test_criterion_5_amplitude_equivalence():
    t0 = time.time()
    checked = 0
    wrong = 0
    for n in range(2, 11):
        g = build_path(n)
        for a in range(1, 10 // n + 1):
            for b in range(1, a + 1):
                for root in [None] + list(range(n)):
                    # the c = a stream contains every less-separated instance
                    for t in enumerate_canonical(g, a, b, a, precolored=root):
                        L = realize(t, g, a, precolored=root)
                        checked += 1
                        if amplitude_condition(L, b) != color_with_lists(L, b).colorable:
                            wrong += 1
    rng = random.Random(505)
    sampled = 0
    while sampled < 10_000:
        n = rng.randint(3, 9)
        a = rng.randint(2, 6)
        if n * a <= 10:
            continue
        g = build_path(n)
        b = rng.randint(1, a)
        c = rng.randint(0, a)
        root = rng.choice([None] + list(range(n)))
        lists = random_lists_sep(rng, g, a, c, pinned=root, b=b if root is not None else None)
        L = ListAssignment(graph=g, lists=lists, a=a, precolored=root)
        sampled += 1
        if amplitude_condition(L, b) != color_with_lists(L, b).colorable:
            wrong += 1
    elapsed = time.time() - t0
    report(
        5,
        wrong == 0,
        f"{checked} exhaustive + {sampled} random path instances, {wrong} discrepancies, {elapsed:.0f}s",
    )


def test_criterion_6_triangle_minimum_grid():
    cells = 0
    bad = 0
    for n in range(4, 13):
        for b in range(1, 5):
            for a in range(b, 4 * b + 1):
                cells += 1
                if not fsep_monotone_check(n, a, b):
                    bad += 1
                res = fsep_min_with_triangle(n, a, b)
                if res.value != min(fsep_cycle(3, a, b).value, fsep_cycle(n, a, b).value):
                    bad += 1
    report(6, bad == 0, f"{cells} grid cells, {bad} violations")


def test_criterion_7_lift_invariants():
    rng = random.Random(707)
    failures = 0
    for _ in range(1000):
        n = rng.randint(3, 8)
        b = rng.randint(1, 2)
        k = rng.randint(1, 3)
        a = rng.randint(b, b + 4)
        c = rng.randint(0, sep_cycle(n, a, b).value)
        g = build_cycle(n)
        lists = random_cycle_lists(rng, n, a + 2 * k, c + k)
        L = ListAssignment(graph=g, lists=lists, a=a + 2 * k)
        seen = {}

        def base(L_res, bb, seen=seen):
            seen["L"] = L_res
            out = color_with_lists(L_res, bb)
            assert out.colorable
            return out.witness

        try:
            phi = lift_cycle(L, b, k, base=base)
        except (ValueError, AssertionError):
            failures += 1
            continue
        L_res = seen["L"]
        if not all(len(lst) >= a for lst in L_res.lists):
            failures += 1
        elif separation(L_res) > c:
            failures += 1
        elif not is_valid_coloring(L, phi, b + k):
            failures += 1
    report(7, failures == 0, f"1000 random lifts, {failures} invariant failures")


def test_criterion_8_two_square_cactus():
    fig = fig1_fixture()
    ok_fig, reason = verify_certificate(fig)
    cactus_value = fsep_cactus(fig.graph, 2, 1).value
    flower = gen_flower(4, 2, 1)
    ok_flower, f_reason = verify_certificate(flower)
    rng = random.Random(808)
    failures = 0
    for _ in range(1000):
        pin = rng.randrange(flower.graph.n)
        lists = random_lists_sep(rng, flower.graph, 2, 0, pinned=pin, b=1)
        L = ListAssignment(graph=flower.graph, lists=lists, a=2, precolored=pin)
        phi = cactus_free_color(L, 1)
        if not is_valid_coloring(L, phi, 1):
            failures += 1
    ok = ok_fig and cactus_value == 0 and ok_flower and failures == 0
    report(
        8,
        ok,
        f"fixture uncolorable={ok_fig}, fsep_cactus={cactus_value}, "
        f"flower uncolorable={ok_flower}, 1000 separated colorings with {failures} failures",
    )
