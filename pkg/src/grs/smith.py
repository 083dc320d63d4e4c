"""Smith graphs (connected, index exactly 2) and Coxeter-Dynkin graphs (index < 2).

Membership is never taken on trust: every catalog form is checked
spectrally in the test suite.  Comparisons of a component's index with 2
use the exact oracle; for connected graphs that is the same as asking how
the component sits relative to the Smith graphs.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .algebraic import from_rational
from .graph import Graph, broom, cycle, double_broom, is_connected, path, spider
from .spectral import spectral_position

TWO = from_rational(2, name="2")


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class DoubleBroom:
    k: int


@dataclass(frozen=True)
class SpiderE6:
    pass


@dataclass(frozen=True)
class SpiderE7:
    pass


@dataclass(frozen=True)
class SpiderE8:
    pass


SmithForm = Union[Cycle, DoubleBroom, SpiderE6, SpiderE7, SpiderE8]


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Broom:
    n: int


@dataclass(frozen=True)
class E6:
    pass


@dataclass(frozen=True)
class E7:
    pass


@dataclass(frozen=True)
class E8:
    pass


DynkinForm = Union[Path, Broom, E6, E7, E8]

_SPIDERS = {
    SpiderE6: (2, 2, 2),
    SpiderE7: (1, 3, 3),
    SpiderE8: (1, 2, 5),
    E6: (1, 2, 2),
    E7: (1, 2, 3),
    E8: (1, 2, 4),
}


def build(form) -> Graph:
    if isinstance(form, Cycle):
        return cycle(form.n)
    if isinstance(form, DoubleBroom):
        return double_broom(form.k)
    if isinstance(form, Path):
        return path(form.n)
    if isinstance(form, Broom):
        return broom(form.n)
    if type(form) in _SPIDERS:
        return spider(*_SPIDERS[type(form)])
    raise TypeError(f"not a catalog form: {form!r}")


def form_size(form) -> int:
    if isinstance(form, (Cycle, Path, Broom)):
        return form.n
    if isinstance(form, DoubleBroom):
        return form.k + 4
    return 1 + sum(_SPIDERS[type(form)])


def form_name(form) -> str:
    if isinstance(form, Cycle):
        return f"cycle {form.n}"
    if isinstance(form, DoubleBroom):
        return f"double_broom {form.k}"
    if isinstance(form, Path):
        return f"path {form.n}"
    if isinstance(form, Broom):
        return f"broom {form.n}"
    return type(form).__name__.lower().replace("spider", "")


def smith_forms(max_vertices: int) -> Iterator[SmithForm]:
    """Every Smith form with at most ``max_vertices`` vertices."""
    for n in range(3, max_vertices + 1):
        yield Cycle(n)
    for k in range(1, max_vertices - 3):
        yield DoubleBroom(k)
    for f in (SpiderE6(), SpiderE7(), SpiderE8()):
        if form_size(f) <= max_vertices:
            yield f


def dynkin_forms(max_vertices: int) -> Iterator[DynkinForm]:
    for n in range(1, max_vertices + 1):
        yield Path(n)
    for n in range(4, max_vertices + 1):
        yield Broom(n)
    for f in (E6(), E7(), E8()):
        if form_size(f) <= max_vertices:
            yield f


def parse_form(text: str):
    """Parse a Smith form: ``cycle 5``, ``double_broom 2``, ``e6`` / ``e7`` / ``e8``."""
    parts = text.replace("(", " ").replace(")", " ").replace(",", " ").split()
    if not parts:
        raise ValueError("empty form")
    head = parts[0].lower()
    args = [int(x) for x in parts[1:]]
    simple = {"e6": SpiderE6, "e7": SpiderE7, "e8": SpiderE8}
    if head in simple and not args:
        return simple[head]()
    with_arg = {"cycle": Cycle, "double_broom": DoubleBroom}
    if head in with_arg and len(args) == 1:
        form = with_arg[head](args[0])
        build(form)
        return form
    raise ValueError(f"unknown catalog form {text!r}")


def parse_dynkin(text: str):
    """Parse ``path 4``, ``broom 5``, ``e6`` / ``e7`` / ``e8`` as Coxeter-Dynkin forms."""
    parts = text.split()
    head = parts[0].lower() if parts else ""
    simple = {"e6": E6, "e7": E7, "e8": E8}
    if head in simple and len(parts) == 1:
        return simple[head]()
    if head in ("path", "broom") and len(parts) == 2:
        form = (Path if head == "path" else Broom)(int(parts[1]))
        build(form)
        return form
    raise ValueError(f"unknown Coxeter-Dynkin form {text!r}")


# --- recognition --------------------------------------------------------------


def _legs(g: Graph, center: int) -> list[int]:
    """Lengths of the pendant paths leaving ``center`` in a tree."""
    legs = []
    for w in g.neighbors(center):
        prev, cur, length = center, w, 1
        while g.degree(cur) == 2:
            nxt = next(x for x in g.neighbors(cur) if x != prev)
            prev, cur, length = cur, nxt, length + 1
        if g.degree(cur) != 1:
            return []
        legs.append(length)
    return sorted(legs)


def recognize_smith(g: Graph) -> Optional[SmithForm]:
    """The Smith form isomorphic to ``g``, if any (label independent)."""
    if not is_connected(g):
        raise ValueError("recognize_smith requires a connected graph")
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    if n >= 3 and all(d == 2 for d in degs):
        return Cycle(n)
    if g.edge_count != n - 1:
        return None
    hist = Counter(degs)
    if n == 5 and hist == Counter({4: 1, 1: 4}):
        return DoubleBroom(1)
    if hist[3] == 1 and max(degs) == 3:
        center = degs.index(3)
        legs = tuple(_legs(g, center))
        for cls in (SpiderE6, SpiderE7, SpiderE8):
            if legs == _SPIDERS[cls]:
                return cls()
        return None
    if hist[3] == 2 and max(degs) == 3 and hist[1] == 4:
        ends = [v for v in range(n) if degs[v] == 3]
        for e in ends:
            if sum(1 for w in g.neighbors(e) if degs[w] == 1) != 2:
                return None
        return DoubleBroom(n - 4)
    return None


class IndexVs2(enum.Enum):
    SUB_SMITH = "sub_smith"
    SMITH = "smith"
    SUPER_SMITH = "super_smith"


def index_vs_2(g: Graph) -> IndexVs2:
    if not is_connected(g):
        raise ValueError("index_vs_2 requires a connected graph")
    pos = spectral_position(g, TWO)
    if pos.m >= 1:
        return IndexVs2.SUPER_SMITH
    if pos.k >= 1:
        return IndexVs2.SMITH
    return IndexVs2.SUB_SMITH
