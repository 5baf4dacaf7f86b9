"""The ten acceptance criteria, each printing one PASS/FAIL line with its running time."""

from __future__ import annotations

import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES, random_positive_genus
from oracles import all_colorings_valid, face_count_by_flags, girth_networkx, shortest_noncontractible_length

from surfcolor import graphs
from surfcolor.coloring import (
    color_000_9g4,
    color_22_9g4,
    exact_threshold,
    residual,
    solve_exact,
    threshold,
    verify_coloring,
)
from surfcolor.constructions import (
    descartes_counts,
    descartes_girth6,
    g1_0009,
    g2_22k,
    gk_2kk,
    sprout,
    thicken_edge,
    two_star_girth7,
)
from surfcolor.discharging import SCHEMES, apply_rules
from surfcolor.embedding import euler_genus, is_orientable, random_embedding
from surfcolor.fixtures import FIXTURES
from surfcolor.planarize import planarizing_subgraph
from surfcolor.topology import shortest_noncontractible_cycle


@contextmanager
def criterion(number: int, title: str, limit: float):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        in_time = elapsed < limit
        status = "PASS" if ok and in_time else "FAIL"
        note = "" if ok else " (assertion failed)"
        if ok and not in_time:
            note = f" (over the {limit:g}s limit)"
        line = f"[{status}] {number:2d}. {title}: {elapsed:.2f}s{note}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert in_time, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"


def fixtures():
    return [make() for make in FIXTURES.values()]


def test_01_euler_identity():
    with criterion(1, "Euler identity on fixtures + 100 random signed rotation systems", 5):
        rng = random.Random(101)
        samples = fixtures() + [random_embedding(rng.randint(2, 10), rng.randint(0, 15), rng) for _ in range(100)]
        for G in samples:
            F = face_count_by_flags(G)
            g = euler_genus(G)
            assert G.num_vertices - G.num_edges + F == 2 - g
            assert g >= 0
            if is_orientable(G):
                assert g % 2 == 0


def test_02_shortest_noncontractible_cycle():
    with criterion(2, "shortest non-contractible cycle on 200 embeddings", 120):
        rng = random.Random(102)
        for G in random_positive_genus(rng, 200, max_n=12, max_extra=24):
            C = shortest_noncontractible_cycle(G)
            on = set(C.vertices)
            assert graphs.num_edges(graphs.induced(G.adj, on)) == len(C)
            assert max(graphs.neighbor_counts(G.adj, on).values()) <= 3
            assert G.num_vertices <= 12
            assert len(C) == shortest_noncontractible_length(G)


def test_03_planarize_postconditions():
    with criterion(3, "planarize postconditions on fixtures + 50 embeddings with g in {1,2}", 120):
        rng = random.Random(103)
        cases = [(G, v) for G in fixtures() if euler_genus(G) > 0 for v in G.vertices]
        cases += [(G, rng.choice(G.vertices)) for G in random_positive_genus(rng, 50, max_n=14, max_extra=25, genera={1, 2})]
        for G, v in cases:
            g = euler_genus(G)
            res = planarizing_subgraph(G, v)
            H = set(res.h_vertices)
            assert v in H
            assert graphs.induces_connected(G.adj, H)
            assert graphs.is_planar(res.quotient)
            assert max(graphs.neighbor_counts(G.adj, H).values()) <= 9 * g - 4


def test_04_pipelines():
    with criterion(4, "(0,0,0,9g-4) and (2,2,9g-4) pipelines on K7, projective K5, C3xC3", 60):
        for name in ("k7", "k5", "grid"):
            G = FIXTURES[name]()
            g = euler_genus(G)
            for pipeline, shape in ((color_000_9g4, (0, 0, 0)), (color_22_9g4, (2, 2))):
                res = pipeline(G)
                assert res.defects.defects == shape + (9 * g - 4,)
                assert verify_coloring(G, res.defects, res.coloring) == []


def test_05_thresholds():
    with criterion(5, "threshold identities for g = 1..100", 5):
        for g in range(1, 101):
            for fam, (b, c, d) in (("2kk", (76, 84, 237)), ("00kk", (40, 48, 80))):
                K = threshold(fam, g)
                assert abs(K * K - b * K - c * g - d - 1) < 1e-9
                Kx = exact_threshold(fam, g)
                assert residual(fam, g, Kx) == 1
            K = threshold("girth7", g)
            assert isinstance(K, int) and K * K - 10 * K + 4 - 14 * g >= 1
        assert threshold("trianglefree", 1) == 14


def test_06_closed_form_counts():
    with criterion(6, "closed-form vertex and edge counts", 30):
        for k in range(6):
            assert g1_0009(k).num_edges == 40 * k + 46
            assert g2_22k(k).num_edges == 196 * k + 217
        for k in range(4):
            gen = gk_2kk(k)
            assert gen.num_vertices == 128 * k * k + 196 * k + 72
            assert graphs.num_edges(gen.graph) == 448 * k * k + 694 * k + 252
            assert descartes_counts(k)[1] == 2 * 7**8 * (7 * k + 1) + 49
        for K in range(6):
            assert graphs.num_edges(two_star_girth7(K).graph) == 27 * K * K + 39 * K + 15


def test_07_unsat_instances():
    with criterion(7, "UNSAT: S(K4,1), thickened edge, two_star(1), C7", 240):
        edge = {0: {1}, 1: {0}}
        cases = [
            (sprout(graphs.complete_graph(4), 1).graph, (0, 0, 0, 0), None),
            (thicken_edge(edge, 0, 1, 1).graph, (1, 1, 1), {0: 2, 1: 3}),
            (two_star_girth7(1).graph, (0, 1), None),
            (graphs.cycle_graph(7), (0, 0), None),
        ]
        for adj, defects, pins in cases:
            t = time.perf_counter()
            assert solve_exact(adj, defects, pins, timeout=60) is None
            assert time.perf_counter() - t < 60


def test_08_solver_vs_enumeration():
    with criterion(8, "solver agrees with enumeration on 50 random graphs", 120):
        rng = random.Random(108)
        for _ in range(50):
            n = rng.randint(1, 8)
            p = rng.random()
            adj = {v: set() for v in range(n)}
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.random() < p:
                        adj[u].add(v)
                        adj[v].add(u)
            defects = tuple(rng.randint(0, 2) for _ in range(rng.randint(1, 3)))
            col = solve_exact(adj, defects)
            assert (col is not None) == all_colorings_valid(adj, defects)
            if col is not None:
                assert verify_coloring(adj, defects, col) == []


def test_09_discharging_totals():
    with criterion(9, "discharging totals and conservation on fixtures + 100 random", 60):
        rng = random.Random(109)
        totals = {"s34": (6, -12), "s35": (6, -12), "s41": (4, -8), "s51": (14, -28)}
        samples = fixtures() + [random_embedding(rng.randint(3, 12), rng.randint(0, 20), rng) for _ in range(100)]
        for G in samples:
            g = euler_genus(G)
            for name in SCHEMES:
                a, b = totals[name]
                led = apply_rules(G, name, rng.randint(0, 6))
                assert led.initial_total == a * g + b
                assert led.final_total == led.initial_total
                final = led.final()
                assert all(final[z] == led.initial[z] + i - o for z, (i, o) in led.flows().items())


def test_10_girth():
    with criterion(10, "girth of descartes samples >= 6 and two_star >= 7", 30):
        for k, sample, seed in ((0, 1, 0), (0, 20, 1), (1, 10, 2), (2, 5, 3)):
            assert girth_networkx(descartes_girth6(k, sample=sample, seed=seed).graph) >= 6
        for K in range(6):
            assert girth_networkx(two_star_girth7(K).graph) >= 7
