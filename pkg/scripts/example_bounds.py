"""Index bounds and classifications for a few hand-built joins."""

from dataclasses import dataclass

from _config import parse_config

from grs.algebraic import parse_bound
from grs.classify import ExactlyAlpha1, NotApplicable, best_bounds, classify
from grs.graph import complete, join_at_new_vertex, path, star
from grs.graph6 import graph6_encode
from grs.spectral import eigenvalues_approx


@dataclass
class ExampleConfig:
    """Print bounds, classifications and the numeric λ₂ for sample graphs."""

    bounds: tuple = ("2", "sqrt3", "2sqrt2")


EXAMPLES = {
    "P5 + P5": [(path(5), [0]), (path(5), [2])],
    "P5 + K1,3": [(path(5), [0]), (star(3), [0])],
    "K1,3 + K2": [(star(3), [0]), (path(2), [0])],
    "K4 + K1,8 + P3": [(complete(4), [0]), (star(8), [0]), (path(3), [0])],
    "K4 + K4": [(complete(4), [0]), (complete(4), [0])],
}


def main(cfg: ExampleConfig) -> int:
    alphas = {b: parse_bound(b) for b in cfg.bounds}
    for name, parts in EXAMPLES.items():
        g = join_at_new_vertex(parts)
        lam2 = eigenvalues_approx(g, 1e-12)[1]
        b = best_bounds(g)
        if isinstance(b, ExactlyAlpha1):
            enclosure = f"= {b.value.approx:.9f}"
        else:
            enclosure = f"in ({b.lower.approx:.9f}, {b.upper.approx:.9f})"
        print(f"{name} [{graph6_encode(g)}]  λ₂ ≈ {lam2:.9f}  {enclosure}")
        for text, a in alphas.items():
            try:
                cls = classify(g, a).value
            except NotApplicable:
                cls = "not_applicable"
            print(f"    vs {text:>7}: {cls}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(parse_config(ExampleConfig)))
