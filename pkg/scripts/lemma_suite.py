"""Run every inequality grid and seeded property suite, and write one JSON report."""

import argparse
import os
import time
from dataclasses import asdict, dataclass

from kapex.report import dumps, emit_report, exit_code
from kapex.verify import LEMMAS, PROPERTIES, check_lemma, enumerated_graphs, property_lower_bound


@dataclass
class Config:
    cases: int = 1000
    seed: int = 0
    lower_bound_n_max: int = 10
    out: str = "results/lemmas.json"


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--cases", type=int, default=Config.cases)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--out", default=Config.out)
    args = p.parse_args()
    cfg = Config(cases=args.cases, seed=args.seed, out=args.out)
    started = time.perf_counter()
    checks = []
    for lemma in LEMMAS:
        t0 = time.perf_counter()
        checks.append(check_lemma(lemma))
        print(f"{lemma:32s} {checks[-1].verdict:15s} {checks[-1].checked:8d} {time.perf_counter() - t0:6.1f}s")
    for name, suite in PROPERTIES.items():
        checks.append(suite(cases=cfg.cases, seed=cfg.seed))
        print(f"{name:32s} {checks[-1].verdict:15s} {checks[-1].checked:8d}")
    checks.append(property_lower_bound(enumerated_graphs(cfg.lower_bound_n_max),
                                       f"trees and c <= 3 graphs, n <= {cfg.lower_bound_n_max}"))
    print(f"{'edge_class_lower_bound':32s} {checks[-1].verdict:15s} {checks[-1].checked:8d}")
    doc = emit_report(checks, asdict(cfg), started)
    os.makedirs(os.path.dirname(cfg.out) or ".", exist_ok=True)
    with open(cfg.out, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
    print(f"wrote {cfg.out}")
    return exit_code(doc)


if __name__ == "__main__":
    raise SystemExit(main())
