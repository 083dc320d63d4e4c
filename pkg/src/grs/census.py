"""Exhaustive census of small graphs and the inconclusive-case searcher.

Every classified graph is cross-checked against the exact oracle
(λ₂ compared with a straight from the characteristic polynomial).  Records
and reports are deterministic: input order is preserved whatever the
worker count, and timing fields are only filled in on request.
"""

from __future__ import annotations

import itertools
import json
import time
from functools import lru_cache
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional, Sequence

from .algebraic import parse_bound
from .classify import (
    NOT_APPLICABLE,
    Classification,
    classify,
)
from .graph import Graph, articulation_points, is_connected, join_at_new_vertex
from .graph6 import graph6_decode, graph6_encode
from .spectral import compare_eigenvalue, eigenvalues_approx, spectral_position

SCHEMA = 1
CSV_COLUMNS = ("graph6", "n", "edges", "cut_vertices", "classification", "oracle", "agree", "micros")
CLASS_NAMES = tuple(c.value for c in Classification) + (NOT_APPLICABLE,)
MAX_BUILTIN_N = 7


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    n: int
    edge_count: int
    cut_vertex_count: int
    classification: str
    oracle_relation: str
    agree: bool
    inconclusive: bool
    elapsed_micros: int = 0

    def csv_row(self) -> str:
        return ",".join(
            str(x)
            for x in (
                self.graph6,
                self.n,
                self.edge_count,
                self.cut_vertex_count,
                self.classification,
                self.oracle_relation,
                str(self.agree).lower(),
                self.elapsed_micros,
            )
        )


# --- enumeration -------------------------------------------------------------------


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2**(n(n-1)/2) labelled graphs on n vertices, by edge bitmask."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for b, p in enumerate(pairs) if mask >> b & 1))


def connected_labeled(n: int) -> Iterator[Graph]:
    return (g for g in labeled_graphs(n) if is_connected(g))


def builtin_enumeration(max_n: int) -> tuple[list[Graph], dict]:
    """Connected labelled graphs with a cut-vertex on up to ``max_n`` vertices."""
    if max_n > MAX_BUILTIN_N:
        raise ValueError(f"built-in enumeration is limited to n <= {MAX_BUILTIN_N}")
    out = []
    stats = {}
    for n in range(1, max_n + 1):
        conn = cut = 0
        for g in connected_labeled(n):
            conn += 1
            if articulation_points(g):
                cut += 1
                out.append(g)
        stats[str(n)] = {"labeled": 2 ** (n * (n - 1) // 2), "connected": conn, "with_cut_vertex": cut}
    return out, stats


# --- per-graph check -----------------------------------------------------------------


def oracle_relation(g: Graph, a) -> str:
    if g.n < 2:
        return "none"
    return compare_eigenvalue(g, 2, a).value


def census_graph(g: Graph, a, timing: bool = False, g6: Optional[str] = None) -> CensusRecord:
    t0 = time.perf_counter()
    oracle = oracle_relation(g, a)
    if is_connected(g) and g.n >= 3:
        cuts = len(articulation_points(g))
    else:
        cuts = 0
    if cuts:
        cls = classify(g, a)
        name = cls.value
        order = cls.as_order()
        agree = order is None or order.value == oracle
        inconclusive = cls is Classification.INCONCLUSIVE
    else:
        name, agree, inconclusive = NOT_APPLICABLE, True, False
    micros = int((time.perf_counter() - t0) * 1e6) if timing else 0
    return CensusRecord(
        g6 if g6 is not None else graph6_encode(g),
        g.n,
        g.edge_count,
        cuts,
        name,
        oracle,
        agree,
        inconclusive,
        micros,
    )


_worker_bound = None
_worker_timing = False


def _init_worker(bound_text, timing):
    global _worker_bound, _worker_timing
    _worker_bound = parse_bound(bound_text)
    _worker_timing = timing


def _work(g6: str) -> CensusRecord:
    return census_graph(graph6_decode(g6), _worker_bound, _worker_timing, g6)


def run_census(
    graphs: Sequence[Graph] | Sequence[str],
    bound_text: str,
    workers: int = 1,
    timing: bool = False,
) -> list[CensusRecord]:
    """Records in input order; ``graphs`` may be Graphs or graph6 strings."""
    g6s = [g if isinstance(g, str) else graph6_encode(g) for g in graphs]
    if workers <= 1:
        _init_worker(bound_text, timing)
        return [_work(s) for s in g6s]
    chunk = max(1, len(g6s) // (workers * 16))
    with Pool(workers, initializer=_init_worker, initargs=(bound_text, timing)) as pool:
        return list(pool.imap(_work, g6s, chunksize=chunk))


def build_report(
    records: Sequence[CensusRecord],
    bound_text: str,
    source: dict,
    emit_records: bool = False,
    wall_time: Optional[float] = None,
) -> dict:
    totals = {name: 0 for name in CLASS_NAMES}
    for r in records:
        totals[r.classification] += 1
    applicable = len(records) - totals[NOT_APPLICABLE]
    report = {
        "schema": SCHEMA,
        "bound": bound_text,
        "source": source,
        "graphs": len(records),
        "totals": totals,
        "contradiction_count": sum(not r.agree for r in records),
        "inconclusive_fraction": (totals["inconclusive"] / applicable) if applicable else 0.0,
    }
    if wall_time is not None:
        report["wall_time_s"] = round(wall_time, 3)
    if emit_records:
        report["records"] = [asdict(r) for r in records]
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_csv(records: Iterable[CensusRecord], path) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(CSV_COLUMNS) + "\n")
        for r in records:
            fh.write(r.csv_row() + "\n")


# --- inconclusive witnesses ------------------------------------------------------------


@lru_cache(maxsize=1)
def atlas_connected() -> tuple[Graph, ...]:
    """Connected graphs on 1..7 vertices, one per isomorphism class."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            out.append(Graph(h.number_of_nodes(), tuple(h.edges())))
    return tuple(out)


@dataclass
class SearchPools:
    small: list[Graph]  # index < a
    big: list[Graph]  # index > a >= second eigenvalue
    at_index: list[Graph]  # index == a


def search_pools(a, max_component: int) -> SearchPools:
    small, big, at = [], [], []
    for h in atlas_connected():
        if h.n > max_component:
            continue
        pos = spectral_position(h, a)
        if pos.m == 0:
            (small if pos.k == 0 else at).append(h)
        elif pos.m == 1:
            big.append(h)
    # two index-a graphs joined at a fresh vertex: index above a, λ₂ exactly a
    for t1, t2 in itertools.combinations_with_replacement(at, 2):
        if t1.n + t2.n + 1 > max_component:
            continue
        seen = set()
        for v1 in range(t1.n):
            for v2 in range(t2.n):
                b = join_at_new_vertex([(t1, [v1]), (t2, [v2])])
                key = graph6_encode(b)
                if key not in seen:
                    seen.add(key)
                    big.append(b)
    return SearchPools(small, big, at)


def _nonempty_subsets(n: int):
    for r in range(1, n + 1):
        yield from itertools.combinations(range(n), r)


def _small_multisets(pool: Sequence[Graph], total: int, start: int = 0):
    """Multisets of pool members (by index, non-decreasing) with sizes summing to total."""
    if total == 0:
        yield ()
        return
    for i in range(start, len(pool)):
        if pool[i].n <= total:
            for rest in _small_multisets(pool, total - pool[i].n, i):
                yield (i,) + rest


def inconclusive_candidates(a, n: int, pools: SearchPools) -> Iterator[Graph]:
    """Graphs on n vertices whose split at the new vertex has an open profile.

    One component is a big-pool member, the rest come from the small pool.
    """
    for b in sorted(pools.big, key=lambda h: h.n):
        rem = n - 1 - b.n
        if rem < 1:
            continue
        for combo in _small_multisets(pools.small, rem):
            smalls = [pools.small[i] for i in combo]
            choices = [list(_nonempty_subsets(b.n))] + [list(_nonempty_subsets(h.n)) for h in smalls]
            for attach in itertools.product(*choices):
                yield join_at_new_vertex(list(zip([b] + smalls, attach)))


def find_inconclusive(
    a,
    max_n: int,
    limit: Optional[int] = 200_000,
    min_equal_multiplicity: int = 1,
) -> dict:
    """Witnesses of each oracle outcome inside the inconclusive class.

    Searches total sizes 3..max_n in order and stops once a Less, a
    Greater and an Equal witness are known (the Equal one with at least
    ``min_equal_multiplicity`` copies of a), or after ``limit`` candidates.
    """
    pools = search_pools(a, max_component=max(1, max_n - 2))
    witnesses: dict[str, Optional[dict]] = {"less": None, "greater": None, "equal": None}
    examined = 0
    exhausted = True
    seen: set[str] = set()

    def done():
        return all(witnesses.values())

    for n in range(3, max_n + 1):
        if done():
            break
        for g in inconclusive_candidates(a, n, pools):
            if limit is not None and examined >= limit:
                exhausted = False
                break
            key = graph6_encode(g)
            if key in seen:
                continue
            seen.add(key)
            examined += 1
            if classify(g, a) is not Classification.INCONCLUSIVE:
                continue
            pos = spectral_position(g, a)
            rel = pos.compare(2).value
            if witnesses[rel] is not None:
                continue
            if rel == "equal" and pos.k < min_equal_multiplicity:
                continue
            witnesses[rel] = {
                "graph6": key,
                "n": g.n,
                "edges": g.edge_count,
                "m": pos.m,
                "k": pos.k,
                "multiplicity": pos.k if rel == "equal" else 0,
                "lambda2": eigenvalues_approx(g, 1e-9)[1],
            }
            if done():
                break
        if not exhausted:
            break
    return {
        "schema": SCHEMA,
        "max_n": max_n,
        "examined": examined,
        "search_exhausted": exhausted,
        "witnesses": witnesses,
    }
