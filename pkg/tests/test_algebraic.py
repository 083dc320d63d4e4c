from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grs.algebraic import (
    NAMED,
    BoundConstant,
    Order,
    RefinementBudgetExceeded,
    Sign,
    compare_largest_roots,
    compare_points,
    from_rational,
    largest_root,
    named,
    parse_bound,
    quad_surd,
    refine,
    sign_at,
    sqrt_int,
)
from grs.graph import complete, path, star
from grs.intpoly import IntPoly, X, eval_rational, sturm_count
from grs.spectral import charpoly

from conftest import random_graph

SQRT3 = named("sqrt3")


def test_constructors():
    two = from_rational(2)
    assert two.defining == X - 2 and two.interval == (1, 2)
    assert SQRT3.defining == IntPoly((-3, 0, 1)) and SQRT3.interval == (1, 2)
    g = quad_surd(Fraction(-1, 2), Fraction(1, 2), 5)
    assert g.defining == IntPoly((-1, 1, 1)) and g.interval == (0, 1)
    assert abs(g.approx - 0.6180339887498949) < 1e-15
    neg = quad_surd(0, -1, 3)
    assert neg.interval == (-2, -1) and abs(neg.approx + 3**0.5) < 1e-15
    with pytest.raises(ValueError):
        sqrt_int(4)
    with pytest.raises(ValueError):
        quad_surd(1, 0, 3)


def test_named():
    assert named("two").defining == X - 2
    t = named("two_sqrt2")
    assert t.defining == IntPoly((-8, 0, 1)) and t.interval == (2, 3)
    s = named("sqrt2_minus_1")
    assert s.defining == IntPoly((-1, 2, 1)) and s.interval == (0, 1)
    assert named("one_third").defining == IntPoly((-1, 3))
    with pytest.raises(ValueError):
        named("pi")
    for name in NAMED:
        a = named(name)
        assert sturm_count(a.defining, a.lo, a.hi) == 1
        assert sign_at(a.defining, a) is Sign.ZERO


def test_parse_bound_grammar():
    assert parse_bound("2") == from_rational(2)
    assert parse_bound("1/3") == from_rational(Fraction(1, 3))
    assert parse_bound("rat:3/2") == from_rational(Fraction(3, 2))
    assert parse_bound("sqrt:3") == SQRT3
    assert parse_bound("2sqrt2") == sqrt_int(8)
    assert parse_bound("surd:-1/2,1/2,5") == named("golden_conj")
    assert parse_bound("golden") == named("golden_conj")
    for bad in ("sqrt:4", "surd:1,2", "rat:x", "nope"):
        with pytest.raises(ValueError):
            parse_bound(bad)


def test_reducible_quadratic_rejected():
    with pytest.raises(ValueError):
        BoundConstant(IntPoly((-1, 0, 1)), 0, 2)
    with pytest.raises(ValueError):
        BoundConstant(IntPoly((-2, 0, 0, 1)), 1, 2)


def test_sign_at_examples():
    assert sign_at(IntPoly((-3, 0, 1)), SQRT3) is Sign.ZERO
    assert sign_at(X - 2, SQRT3) is Sign.NEGATIVE
    assert sign_at(IntPoly((0, -1, 0, 1)), SQRT3) is Sign.POSITIVE
    with pytest.raises(ValueError):
        sign_at(IntPoly(()), SQRT3)


def test_budget_tripwire():
    # x^2 - 3 squared is not irreducible; a double root matches a to all precision
    fake = BoundConstant.__new__(BoundConstant)
    object.__setattr__(fake, "poly", IntPoly((-3, 0, 1)))
    object.__setattr__(fake, "lo", Fraction(1))
    object.__setattr__(fake, "hi", Fraction(2))
    object.__setattr__(fake, "name", None)
    close = IntPoly((-3 * 10**40 - 1, 0, 10**40))  # root just above sqrt(3)
    assert sign_at(close, fake) is Sign.NEGATIVE
    with pytest.raises(RefinementBudgetExceeded):
        sign_at(close, fake, budget=8)


def test_refine():
    r = refine(SQRT3, Fraction(1, 100))
    assert r.width <= Fraction(1, 100)
    assert r.lo**2 < 3 <= r.hi**2
    t = refine(named("two_sqrt2"), Fraction(1, 1000))
    assert t.width <= Fraction(1, 1000) and t.lo**2 < 8 <= t.hi**2
    two = refine(from_rational(2), Fraction(1, 10**6))
    assert two.lo < 2 <= two.hi and two == from_rational(2)


sample_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=6).map(
    lambda cs: IntPoly(tuple(cs))
).filter(lambda p: not p.is_zero())


@settings(max_examples=300, deadline=None)
@given(sample_polys, st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_sign_at_rational_agrees(p, r):
    v = eval_rational(p, r)
    assert int(sign_at(p, from_rational(r))) == (v > 0) - (v < 0)


@settings(max_examples=100, deadline=None)
@given(sample_polys, st.sampled_from(NAMED), st.integers(1, 30))
def test_sign_independent_of_refinement(p, name, bits):
    a = named(name)
    assert sign_at(p, a) == sign_at(p, refine(a, Fraction(1, 2**bits)))


def test_compare_largest_roots_examples():
    q = IntPoly((-3, 0, 1))
    assert compare_largest_roots(q, q) is Order.EQUAL
    assert compare_largest_roots(charpoly(complete(3)), charpoly(complete(2))) is Order.GREATER
    assert compare_largest_roots(charpoly(path(5)), charpoly(star(3))) is Order.EQUAL
    with pytest.raises(ValueError):
        compare_largest_roots(IntPoly((1, 0, 1)), q)


def test_compare_largest_roots_against_floats(rng):
    import numpy as np

    from conftest import to_nx
    import networkx as nx

    polys = []
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8))
        lam = max(np.linalg.eigvalsh(nx.to_numpy_array(to_nx(g)))) if g.n else 0.0
        polys.append((charpoly(g), lam))
    for (p1, l1), (p2, l2) in zip(polys, polys[1:] + polys[:1]):
        o = compare_largest_roots(p1, p2)
        if abs(l1 - l2) > 1e-9:
            assert o is (Order.GREATER if l1 > l2 else Order.LESS)
        else:
            assert o is Order.EQUAL


def test_largest_root_enclosure():
    e = largest_root(charpoly(star(8)))
    assert abs(e.approx - 8**0.5) < 1e-12
    assert compare_points(e, sqrt_int(8)) is Order.EQUAL
    assert compare_points(e, SQRT3) is Order.GREATER
