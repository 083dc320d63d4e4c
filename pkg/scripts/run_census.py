"""Exhaustive census over several bounds; writes one JSON report per bound."""

from dataclasses import dataclass, field
from pathlib import Path

from _config import parse_config

from grs.census import build_report, builtin_enumeration, dump_report, run_census


@dataclass
class CensusConfig:
    """Census of connected labelled graphs with a cut-vertex."""

    max_n: int = 6
    bounds: list = field(default_factory=lambda: ["2", "sqrt3", "rat:3/2", "2sqrt2", "golden"])
    workers: int = 4
    out_dir: str = "results/census"


def main(cfg: CensusConfig) -> int:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    graphs, stats = builtin_enumeration(cfg.max_n)
    print(f"{len(graphs)} graphs with a cut-vertex on <= {cfg.max_n} vertices")
    print(f"{'bound':>10} {'less':>7} {'equal':>7} {'greater':>8} {'open':>7} {'open %':>7} {'bad':>4}")
    bad_total = 0
    for bound in cfg.bounds:
        recs = run_census(graphs, bound, workers=cfg.workers)
        rep = build_report(recs, bound, {"max_n": cfg.max_n, "enumeration": stats})
        name = bound.replace(":", "_").replace("/", "_")
        (out / f"census_{name}.json").write_text(dump_report(rep))
        t = rep["totals"]
        print(
            f"{bound:>10} {t['less_than']:>7} {t['equal']:>7} {t['greater_than']:>8} "
            f"{t['inconclusive']:>7} {100 * rep['inconclusive_fraction']:>6.2f}% {rep['contradiction_count']:>4}"
        )
        bad_total += rep["contradiction_count"]
    return 1 if bad_total else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_config(CensusConfig)))
