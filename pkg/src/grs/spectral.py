"""Exact spectral computations on adjacency matrices.

The characteristic polynomial comes from the Faddeev-LeVerrier recurrence
over Python integers.  Schwenk's vertex and edge expansions are provided
as an independent second route to the same polynomial (they enumerate
cycles, so they are only meant for small graphs).

Everything that compares an eigenvalue with a threshold goes through
:func:`spectral_position`, which returns how many eigenvalues (with
multiplicity) lie strictly above the threshold and how often the threshold
itself occurs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .algebraic import BoundConstant, Order, Point, Sign, sign_at
from .graph import Graph
from .intpoly import (
    ONE,
    X,
    IntPoly,
    bisect_root,
    count_roots_above,
    derivative,
    divides,
    exact_div,
    isolate_roots,
    sign_at_rational,
    squarefree_layers,
)

SCHWENK_MAX_N = 12


@lru_cache(maxsize=1 << 17)
def charpoly(g: Graph) -> IntPoly:
    """det(xI - A) by the Faddeev-LeVerrier recurrence.

    With M_1 = I, c_{n-k} = -tr(A M_k) / k and M_{k+1} = A M_k + c_{n-k} I.
    Every division is exact over the integers.  The empty graph gives 1.
    """
    n = g.n
    if n == 0:
        return ONE
    adj = [g.neighbors(i) for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        # B = A M, using the 0/1 structure of A row by row
        B = []
        for i in range(n):
            row = [0] * n
            for j in adj[i]:
                Mj = M[j]
                for c in range(n):
                    row[c] += Mj[c]
            B.append(row)
        tr = sum(B[i][i] for i in range(n))
        c = -tr // k
        assert c * k == -tr
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                B[i][i] += c
            M = B
    return IntPoly(tuple(coeffs))


# --- cycles -------------------------------------------------------------------


@dataclass(frozen=True)
class CycleSet:
    """Simple cycles through an anchor, each as a vertex sequence."""

    anchor: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    @property
    def vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(c) for c in self.cycles]


def cycles_through_vertex(g: Graph, v: int) -> CycleSet:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    found = []
    path = [v]
    on_path = {v}

    def dfs(x):
        for y in g.neighbors(x):
            if y == v and len(path) >= 3 and path[1] < path[-1]:
                # each cycle is reached in both directions; keep one
                found.append(tuple(path))
            elif y not in on_path:
                on_path.add(y)
                path.append(y)
                dfs(y)
                path.pop()
                on_path.discard(y)

    dfs(v)
    return CycleSet((v,), tuple(sorted(found)))


def cycles_through_edge(g: Graph, u: int, v: int) -> CycleSet:
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    found = []
    path = [u]
    on_path = {u}

    def dfs(x):
        for y in g.neighbors(x):
            if y == v:
                if len(path) >= 2:
                    found.append(tuple(path) + (v,))
            elif y not in on_path:
                on_path.add(y)
                path.append(y)
                dfs(y)
                path.pop()
                on_path.discard(y)

    dfs(u)
    return CycleSet((u, v), tuple(sorted(found)))


def _check_schwenk_size(g, allow_large):
    if g.n > SCHWENK_MAX_N and not allow_large:
        raise ValueError(
            f"Schwenk expansion enumerates cycles; n={g.n} exceeds {SCHWENK_MAX_N} "
            "(pass allow_large=True to override)"
        )


def schwenk_vertex(g: Graph, v: int, allow_large: bool = False) -> IntPoly:
    """x P(G-v) - sum over neighbours u of P(G-v-u) - 2 sum over cycles C of P(G-V(C))."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    _check_schwenk_size(g, allow_large)
    out = X * charpoly(g.remove_vertices([v]))
    for u in g.neighbors(v):
        out = out - charpoly(g.remove_vertices([v, u]))
    for c in cycles_through_vertex(g, v):
        out = out - charpoly(g.remove_vertices(c)).scale(2)
    return out


def schwenk_edge(g: Graph, u: int, v: int, allow_large: bool = False) -> IntPoly:
    """P(G-uv) - P(G-u-v) - 2 sum over cycles C through uv of P(G-V(C))."""
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    _check_schwenk_size(g, allow_large)
    out = charpoly(g.remove_edge(u, v)) - charpoly(g.remove_vertices([u, v]))
    for c in cycles_through_edge(g, u, v):
        out = out - charpoly(g.remove_vertices(c)).scale(2)
    return out


# --- positions against a threshold ---------------------------------------------


@dataclass(frozen=True)
class SpectralPosition:
    """``m`` eigenvalues strictly above the threshold, ``k`` equal to it."""

    m: int
    k: int

    def compare(self, j: int) -> Order:
        """Relation of the j-th largest eigenvalue (1-based) to the threshold."""
        if self.m >= j:
            return Order.GREATER
        if j <= self.m + self.k:
            return Order.EQUAL
        return Order.LESS


@lru_cache(maxsize=1 << 16)
def multiplicity(p: IntPoly, a: BoundConstant) -> tuple[int, IntPoly]:
    """Largest k with defining(a)**k | p, and the deflated quotient."""
    k = 0
    while p.degree >= 1 and divides(a.defining, p):
        p = exact_div(p, a.defining)
        k += 1
    return k, p


@lru_cache(maxsize=1 << 16)
def _position_from_poly(p: IntPoly, a: BoundConstant) -> SpectralPosition:
    k, rest = multiplicity(p, a)
    m = sum(a.roots_above(layer) for layer in squarefree_layers(rest))
    return SpectralPosition(m, k)


def position_by_layers(p: IntPoly, a: Point) -> SpectralPosition:
    """(m, k) for ``p`` at any algebraic point, via square-free layers alone.

    Does not deflate; works for :class:`RootEnclosure` points whose
    polynomial is not irreducible.
    """
    m = k = 0
    for layer in squarefree_layers(p):
        if a.vanishes(layer):
            k += 1
        m += a.roots_above(layer)
    return SpectralPosition(m, k)


def poly_position(p: IntPoly, a: Point) -> SpectralPosition:
    if isinstance(a, BoundConstant):
        return _position_from_poly(p, a)
    return position_by_layers(p, a)


def spectral_position(g: Graph, a: Point) -> SpectralPosition:
    return poly_position(charpoly(g), a)


def count_below(g: Graph, a: Point) -> int:
    """Eigenvalues strictly below ``a``, with multiplicity."""
    return sum(a.roots_below(layer) for layer in squarefree_layers(charpoly(g)))


def compare_eigenvalue(g: Graph, j: int, a: Point) -> Order:
    """Exact relation of λ_j(G) to ``a``."""
    if not 1 <= j <= g.n:
        raise ValueError(f"eigenvalue index {j} out of range for n={g.n}")
    return spectral_position(g, a).compare(j)


def lemma4_sign(g: Graph, a: Point) -> int:
    """Sign of Q(a) where P_G(x) = (x - a)^k Q(x), via Q(a) = P^(k)(a) / k!."""
    pos = spectral_position(g, a)
    if pos.k == 0:
        raise ValueError(f"{a} is not an eigenvalue")
    s = sign_at(derivative(charpoly(g), pos.k), a)
    assert s is not Sign.ZERO
    return int(s)


def count_above_rational(p: IntPoly, r) -> int:
    """Roots of ``p`` strictly above rational ``r``, with multiplicity."""
    return sum(count_roots_above(layer, r) for layer in squarefree_layers(p))


def eigenvalues_approx(g: Graph, tol: float = 1e-10) -> list[float]:
    """All eigenvalues with multiplicity, descending, to absolute ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    w = Fraction(tol)
    out = []
    for layer in squarefree_layers(charpoly(g)):
        for lo, hi in isolate_roots(layer):
            lo, hi = bisect_root(layer, lo, hi, w)
            # rational eigenvalues are integers; report those exactly
            z = math.floor(hi)
            if lo < z and sign_at_rational(layer, z) == 0:
                out.append(float(z))
            else:
                out.append(float((lo + hi) / 2))
    out.sort(reverse=True)
    return out


def interlacing_counts_ok(g: Graph, v: int, probes: Iterable) -> bool:
    """One-vertex interlacing restated as counts above each probe.

    For H = G - v the number of eigenvalues above r drops by 0 or 1.
    """
    pg = charpoly(g)
    ph = charpoly(g.remove_vertices([v]))
    for r in probes:
        cg = count_above_rational(pg, r)
        ch = count_above_rational(ph, r)
        if ch not in (cg - 1, cg):
            return False
    return True
