"""Second-largest-eigenvalue decisions at a cut-vertex.

Given a cut-vertex u and a threshold a > 0, the components of G - u are
compared with a by their indices, and a six-branch table decides whether
λ₂(G) is below, at or above a.  One configuration is left open: a single
component with index above a whose own λ₂ is not above a, the others
below a.  Corollary-style bounds enclose λ₂(G) between the two largest
component indices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .algebraic import (
    Order,
    Point,
    RootEnclosure,
    compare_points,
    is_positive,
    largest_root,
    named,
)
from .graph import Graph, articulation_points, is_connected, remove_vertex_split
from .spectral import charpoly, compare_eigenvalue


class NotApplicable(ValueError):
    """The graph has no cut-vertex, so the decision table does not apply."""


class InconsistentClassification(AssertionError):
    """Two cut-vertices produced different determined answers."""


class Classification(enum.Enum):
    LESS_THAN = "less_than"
    EQUAL_TO = "equal"
    GREATER_THAN = "greater_than"
    INCONCLUSIVE = "inconclusive"

    @property
    def determined(self) -> bool:
        return self is not Classification.INCONCLUSIVE

    def as_order(self) -> Optional[Order]:
        return _TO_ORDER.get(self)


_TO_ORDER = {
    Classification.LESS_THAN: Order.LESS,
    Classification.EQUAL_TO: Order.EQUAL,
    Classification.GREATER_THAN: Order.GREATER,
}

NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Profile:
    relations: tuple[Order, ...]
    big_second: Optional[Order] = None

    def __post_init__(self):
        greater = sum(r is Order.GREATER for r in self.relations)
        if (self.big_second is not None) != (greater == 1):
            raise ValueError("big_second must be given exactly when one component is Greater")

    def to_dict(self) -> dict:
        return {
            "relations": [r.value for r in self.relations],
            "big_second": self.big_second.value if self.big_second else None,
        }


def _check_bound(a: Point) -> None:
    if not is_positive(a):
        raise ValueError(f"the threshold must be positive, got {a}")


def component_profile(g: Graph, u: int, a: Point) -> Profile:
    if not is_connected(g):
        raise ValueError("graph must be connected")
    _check_bound(a)
    split = remove_vertex_split(g, u)
    if len(split) < 2:
        raise ValueError(f"vertex {u} is not a cut-vertex")
    rels = tuple(compare_eigenvalue(c, 1, a) for c in split.graphs)
    big = None
    greater = [c for c, r in zip(split.graphs, rels) if r is Order.GREATER]
    if len(greater) == 1:
        # a one-vertex component has index 0 < a, so λ₂ exists here
        big = compare_eigenvalue(greater[0], 2, a)
    return Profile(rels, big)


def grs_decide(p: Profile) -> Classification:
    if len(p.relations) < 2:
        raise ValueError("a cut-vertex profile has at least two components")
    greater = sum(r is Order.GREATER for r in p.relations)
    equal = sum(r is Order.EQUAL for r in p.relations)
    if greater >= 2:
        return Classification.GREATER_THAN
    if greater == 1:
        if equal >= 1:
            return Classification.GREATER_THAN
        if p.big_second is Order.GREATER:
            return Classification.GREATER_THAN
        return Classification.INCONCLUSIVE
    if equal >= 2:
        return Classification.EQUAL_TO
    return Classification.LESS_THAN


def classify_at(g: Graph, u: int, a: Point) -> Classification:
    return grs_decide(component_profile(g, u, a))


def cut_vertices(g: Graph) -> list[int]:
    if not is_connected(g):
        raise ValueError("graph must be connected")
    cuts = sorted(articulation_points(g))
    if not cuts:
        raise NotApplicable("graph has no cut-vertex")
    return cuts


def classify_all(g: Graph, a: Point) -> list[tuple[int, Profile, Classification]]:
    """Per cut-vertex profile and decision, ascending vertex order."""
    out = []
    for u in cut_vertices(g):
        prof = component_profile(g, u, a)
        out.append((u, prof, grs_decide(prof)))
    return out


def classify(g: Graph, a: Point) -> Classification:
    """First determined decision over the cut-vertices, else Inconclusive.

    All determined decisions are required to agree.
    """
    results = classify_all(g, a)
    determined = {c for _, _, c in results if c.determined}
    if len(determined) > 1:
        raise InconsistentClassification(
            f"cut-vertices disagree: {sorted(c.value for c in determined)}"
        )
    for _, _, c in results:
        if c.determined:
            return c
    return Classification.INCONCLUSIVE


def rs_classify(g: Graph) -> Classification:
    """The a = 2 specialisation (Smith-graph vocabulary)."""
    return classify(g, named("two"))


# --- index bounds from the two largest component indices ------------------------


@dataclass(frozen=True)
class ExactlyAlpha1:
    value: RootEnclosure
    cut_vertex: Optional[int] = None


@dataclass(frozen=True)
class Open:
    lower: RootEnclosure
    upper: RootEnclosure
    lower_vertex: Optional[int] = None
    upper_vertex: Optional[int] = None


Bounds = Union[ExactlyAlpha1, Open]


def _sort_key_desc(enclosures: Sequence[RootEnclosure]) -> list[RootEnclosure]:
    """Exact descending sort (insertion sort; component counts are small)."""
    out: list[RootEnclosure] = []
    for e in enclosures:
        i = 0
        while i < len(out) and compare_points(out[i], e) is not Order.LESS:
            i += 1
        out.insert(i, e)
    return out


def corollary1_bounds(g: Graph, u: int) -> Bounds:
    split = remove_vertex_split(g, u)
    if len(split) < 2:
        raise ValueError(f"vertex {u} is not a cut-vertex")
    indices = [largest_root(charpoly(c)) for c in split.graphs]
    a1, a2 = _sort_key_desc(indices)[:2]
    if compare_points(a1, a2) is Order.EQUAL:
        return ExactlyAlpha1(a1, u)
    return Open(a2, a1, u, u)


def best_bounds(g: Graph) -> Bounds:
    """Tightest enclosure over all cut-vertices; an exact value wins outright.

    Intersecting across cut-vertices goes beyond the single-vertex statement,
    but each interval is individually sound, so the intersection is too.
    """
    best: Optional[Open] = None
    for u in cut_vertices(g):
        b = corollary1_bounds(g, u)
        if isinstance(b, ExactlyAlpha1):
            return b
        if best is None:
            best = b
            continue
        lower, lv = best.lower, best.lower_vertex
        upper, uv = best.upper, best.upper_vertex
        if compare_points(b.lower, lower) is Order.GREATER:
            lower, lv = b.lower, b.lower_vertex
        if compare_points(b.upper, upper) is Order.LESS:
            upper, uv = b.upper, b.upper_vertex
        best = Open(lower, upper, lv, uv)
    assert best is not None
    return best
