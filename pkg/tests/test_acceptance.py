"""Acceptance criteria, one test per criterion.

Every check is exact; the only numeric limits are the wall-clock budgets.
A per-criterion PASS/FAIL table is printed at the end of the run.
"""

import itertools
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from grs.algebraic import Order, Sign, compare_points, from_rational, named, sign_at, sqrt_int
from grs.census import builtin_enumeration, find_inconclusive, run_census
from grs.classify import (
    Classification,
    ExactlyAlpha1,
    Open,
    best_bounds,
    classify,
    corollary1_bounds,
    cut_vertices,
    rs_classify,
)
from grs.graph import (
    Graph,
    articulation_points,
    complete,
    cone_attach,
    is_connected,
    join_at_new_vertex,
    path,
    star,
)
from grs.graph6 import graph6_decode, graph6_encode
from grs.census import connected_labeled, labeled_graphs
from grs.smith import Broom, Path, build, dynkin_forms, form_name, smith_forms
from grs.spectral import (
    SpectralPosition,
    charpoly,
    compare_eigenvalue,
    interlacing_counts_ok,
    lemma4_sign,
    position_by_layers,
    schwenk_edge,
    schwenk_vertex,
    spectral_position,
)

from conftest import alpha_catalog, isomorphic

CENSUS_BOUNDS = ("2", "sqrt3", "rat:3/2", "2sqrt2", "golden")
CATALOG = alpha_catalog()
SQRT3 = named("sqrt3")
TWO = named("two")


def rand_graph(rng, n, p):
    return Graph(n, tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def rand_connected(rng, n):
    while True:
        g = rand_graph(rng, n, rng.uniform(0.2, 0.7))
        if is_connected(g):
            return g


@pytest.fixture(scope="module")
def census_graphs():
    graphs, _ = builtin_enumeration(6)
    return graphs


@pytest.fixture(scope="module")
def sqrt3_search():
    return find_inconclusive(SQRT3, 9, min_equal_multiplicity=2)


def test_criterion_01_smith_catalog_exactness():
    t0 = time.perf_counter()
    smith = list(smith_forms(30))
    dynkin = list(dynkin_forms(30))
    assert len(smith) == 28 + 26 + 3
    for f in smith:
        assert spectral_position(build(f), TWO) == SpectralPosition(0, 1), form_name(f)
    for f in dynkin:
        assert spectral_position(build(f), TWO) == SpectralPosition(0, 0), form_name(f)
    assert time.perf_counter() - t0 < 10


def test_criterion_02_schwenk_equivalence():
    t0 = time.perf_counter()

    def check(g):
        p = charpoly(g)
        for v in range(g.n):
            assert schwenk_vertex(g, v) == p
        for u, w in g.edges:
            assert schwenk_edge(g, u, w) == p

    count = 0
    for n in range(1, 7):
        for g in connected_labeled(n):
            check(g)
            count += 1
    assert count == 1 + 1 + 4 + 38 + 728 + 26704
    rng = random.Random(7)
    for _ in range(200):
        check(rand_graph(rng, rng.randint(7, 9), 0.5))
    assert time.perf_counter() - t0 < 120


def test_criterion_03_grs_soundness_census(census_graphs):
    t0 = time.perf_counter()
    assert len(census_graphs) == 15857
    for bound in CENSUS_BOUNDS:
        records = run_census(census_graphs, bound)
        bad = [r.graph6 for r in records if not r.agree]
        assert bad == [], (bound, bad[:5])
        assert all(r.classification != "not_applicable" for r in records)
    assert time.perf_counter() - t0 < 300


def test_criterion_04_rs_specialization(census_graphs):
    for g in census_graphs:
        assert rs_classify(g) is classify(g, TWO)


def test_criterion_05_cone_attachment_sign():
    t0 = time.perf_counter()
    rng = random.Random(11)
    cases = []
    for f in smith_forms(12):
        g1 = build(f)
        subsets = [s for r in (1, 2, 3) for s in itertools.combinations(range(g1.n), r)]
        cases += [(g1, TWO, s) for s in rng.sample(subsets, min(len(subsets), 40))]
    for g1 in (path(5), star(3)):
        for r in range(1, g1.n + 1):
            cases += [(g1, SQRT3, s) for s in itertools.combinations(range(g1.n), r)]
    assert len(cases) >= 500
    for g1, a, s in cases:
        g = cone_attach(g1, s)
        assert sign_at(charpoly(g), a) is Sign.NEGATIVE
        assert compare_eigenvalue(g, 2, a) is Order.LESS
        assert compare_eigenvalue(g, 1, a) is Order.GREATER
    assert time.perf_counter() - t0 < 60


def test_criterion_06_deflated_sign():
    rng = random.Random(13)
    checked = 0
    for _ in range(5000):
        g = rand_graph(rng, rng.randint(1, 7), rng.uniform(0.1, 0.9))
        for a in CATALOG:
            pos = spectral_position(g, a)
            if pos.k:
                assert lemma4_sign(g, a) == (-1) ** pos.m
                checked += 1
    assert checked > 1000


def test_criterion_07_multiplicity_delta():
    rng = random.Random(17)
    pairs = 0
    while pairs < 2000:
        g = rand_connected(rng, rng.randint(2, 8))
        if rng.random() < 0.5:
            k = rng.randint(1, g.n)
            h = cone_attach(g, rng.sample(range(g.n), k))
        else:
            removable = [v for v in range(g.n) if v not in articulation_points(g)]
            if g.n < 3 or not removable:
                continue
            h = g.remove_vertices([rng.choice(removable)])
            assert is_connected(h)
        for a in CATALOG:
            d = spectral_position(h, a).k - spectral_position(g, a).k
            assert d in (-1, 0, 1)
        pairs += 1


def test_criterion_08_interlacing_counts():
    rng = random.Random(19)
    for _ in range(5000):
        g = rand_connected(rng, rng.randint(2, 7))
        v = rng.randrange(g.n)
        probes = [Fraction(k, 2) for k in range(-2 * g.n, 2 * g.n + 1)]
        assert interlacing_counts_ok(g, v, probes)


def test_criterion_09_equal_case_reproduction(sqrt3_search):
    at_sqrt3 = [f for f in dynkin_forms(12) if spectral_position(build(f), SQRT3) == SpectralPosition(0, 1)]
    assert sorted(at_sqrt3, key=form_name) == sorted([Path(5), Broom(4)], key=form_name)
    assert isomorphic(build(Broom(4)), star(3))
    for s1, s2 in itertools.product(range(5), range(4)):
        g = join_at_new_vertex([(path(5), [s1]), (star(3), [s2])])
        assert classify(g, SQRT3) is Classification.EQUAL_TO
        assert compare_eigenvalue(g, 2, SQRT3) is Order.EQUAL
    w = sqrt3_search["witnesses"]["equal"]
    assert w is not None
    g = graph6_decode(w["graph6"])
    assert classify(g, SQRT3) is Classification.INCONCLUSIVE
    pos = spectral_position(g, SQRT3)
    assert pos.m == 1 and pos.k >= 2  # λ₂ = λ₃ = √3
    assert compare_eigenvalue(g, 2, SQRT3) is Order.EQUAL
    assert compare_eigenvalue(g, 3, SQRT3) is Order.EQUAL


def test_criterion_10_inconclusive_realizability(sqrt3_search):
    for rel, order in (("less", Order.LESS), ("greater", Order.GREATER)):
        w = sqrt3_search["witnesses"][rel]
        assert w is not None, rel
        g = graph6_decode(w["graph6"])
        assert g.n <= 9
        assert classify(g, SQRT3) is Classification.INCONCLUSIVE
        assert compare_eigenvalue(g, 2, SQRT3) is order


def test_criterion_11_bounds_example():
    g = join_at_new_vertex([(complete(4), [0]), (star(8), [0]), (path(3), [0])])
    two_sqrt2, three = sqrt_int(8), from_rational(3)
    at_join = corollary1_bounds(g, g.n - 1)
    assert isinstance(at_join, Open)
    assert compare_points(at_join.lower, two_sqrt2) is Order.EQUAL
    assert compare_points(at_join.upper, three) is Order.EQUAL
    b = best_bounds(g)
    assert isinstance(b, Open)
    assert compare_points(b.lower, two_sqrt2) is not Order.LESS
    assert compare_points(b.upper, three) is not Order.GREATER
    assert compare_eigenvalue(g, 2, two_sqrt2) is Order.GREATER
    assert compare_eigenvalue(g, 2, three) is Order.LESS
    p = charpoly(g)
    assert position_by_layers(p, b.lower).compare(2) is Order.GREATER
    assert position_by_layers(p, b.upper).compare(2) is Order.LESS


def test_criterion_12_index_bounds_random_soundness():
    t0 = time.perf_counter()
    rng = random.Random(23)
    done = 0
    while done < 1000:
        g = rand_graph(rng, rng.randint(3, 9), rng.uniform(0.15, 0.6))
        if not is_connected(g) or not articulation_points(g):
            continue
        p = charpoly(g)
        for u in cut_vertices(g):
            b = corollary1_bounds(g, u)
            if isinstance(b, ExactlyAlpha1):
                assert position_by_layers(p, b.value).compare(2) is Order.EQUAL
            else:
                assert position_by_layers(p, b.lower).compare(2) is Order.GREATER
                assert position_by_layers(p, b.upper).compare(2) is Order.LESS
        b = best_bounds(g)
        if isinstance(b, Open):
            assert position_by_layers(p, b.lower).compare(2) is Order.GREATER
            assert position_by_layers(p, b.upper).compare(2) is Order.LESS
        done += 1
    assert time.perf_counter() - t0 < 300


def test_criterion_13_graph6_round_trip():
    for n in range(0, 6):
        for g in labeled_graphs(n):
            s = graph6_encode(g)
            assert graph6_decode(s) == g
            assert graph6_encode(graph6_decode(s)) == s
    rng = random.Random(29)
    for _ in range(300):
        g = rand_graph(rng, rng.randint(0, 62), rng.random())
        s = graph6_encode(g)
        assert graph6_decode(s) == g and graph6_encode(graph6_decode(s)) == s


def test_criterion_14_determinism(tmp_path):
    outs = []
    for workers in ("1", "4"):
        out = tmp_path / f"report_{workers}.json"
        subprocess.run(
            [sys.executable, "-m", "grs", "census", "--max-n", "6", "--bound", "sqrt3",
             "--workers", workers, "--emit-records", "-o", str(out)],
            check=True,
        )
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
