"""Search the open case of the decision table for Less, Equal and Greater witnesses."""

import json
from dataclasses import dataclass

from _config import parse_config

from grs.algebraic import parse_bound
from grs.census import find_inconclusive


@dataclass
class SearchConfig:
    """Witness search inside the inconclusive class."""

    bound: str = "sqrt3"
    max_n: int = 9
    limit: int = 200_000
    min_multiplicity: int = 2
    output: str = ""


def main(cfg: SearchConfig) -> int:
    res = find_inconclusive(
        parse_bound(cfg.bound), cfg.max_n, limit=cfg.limit or None,
        min_equal_multiplicity=cfg.min_multiplicity,
    )
    res["bound"] = cfg.bound
    text = json.dumps(res, indent=2, sort_keys=True)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    print(f"examined {res['examined']} candidates (exhausted: {res['search_exhausted']})")
    for rel, w in res["witnesses"].items():
        if w is None:
            print(f"  {rel:>7}: none found")
        else:
            print(f"  {rel:>7}: {w['graph6']:<12} n={w['n']} m={w['m']} k={w['k']} λ₂≈{w['lambda2']:.6f}")
    return 0 if all(res["witnesses"].values()) else 1


if __name__ == "__main__":
    raise SystemExit(main(parse_config(SearchConfig)))
