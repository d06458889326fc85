"""Time every determinant route and both path models on a seeded sweep of random graphs.

    python scripts/route_timings.py --max-n 7 --seeds 2 --csv timings.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import asdict, dataclass, fields
from itertools import product

from pathdet import (
    best_word_sum,
    build_colored_matrix,
    det_division_free,
    det_leibniz,
    det_via_lsd,
    graph_random,
    path_generating_function,
)


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 7
    max_k: int = 3
    densities: tuple[float, ...] = (0.0, 0.3, 0.7, 1.0)
    seeds: int = 2
    oracle_max_n: int = 7


@dataclass
class Row:
    n: int
    k: int
    density: float
    seed: int
    terms: int
    agree: bool
    division_free_s: float
    leibniz_s: float
    lsd_s: float
    path_gf_s: float
    best_words_s: float


def timed(f, arg):
    t = time.perf_counter()
    out = f(arg)
    return out, time.perf_counter() - t


def run(cfg: SweepConfig) -> list[Row]:
    rows = []
    for n, k, d, s in product(range(1, cfg.max_n + 1), range(1, cfg.max_k + 1), cfg.densities, range(cfg.seeds)):
        g = graph_random(n, k, d, seed=s)
        m = build_colored_matrix(g)
        df, t_df = timed(det_division_free, m)
        gf, t_gf = timed(path_generating_function, g)
        bw, t_bw = timed(best_word_sum, g)
        values = [df, gf, bw]
        t_lb = t_lsd = float("nan")
        if n <= cfg.oracle_max_n:
            lb, t_lb = timed(det_leibniz, m)
            ls, t_lsd = timed(det_via_lsd, m)
            values += [lb, ls]
        rows.append(Row(n, k, d, s, len(df), len(set(values)) == 1, t_df, t_lb, t_lsd, t_gf, t_bw))
    return rows


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    p.add_argument("--max-k", type=int, default=SweepConfig.max_k)
    p.add_argument("--seeds", type=int, default=SweepConfig.seeds)
    p.add_argument("--oracle-max-n", type=int, default=SweepConfig.oracle_max_n)
    p.add_argument("--csv", help="write every row to this file")
    a = p.parse_args()
    cfg = SweepConfig(max_n=a.max_n, max_k=a.max_k, seeds=a.seeds, oracle_max_n=a.oracle_max_n)
    rows = run(cfg)
    if a.csv:
        with open(a.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, [f.name for f in fields(Row)])
            w.writeheader()
            w.writerows(asdict(r) for r in rows)

    print(f"{'n':>2} {'k':>2} {'graphs':>6} {'max terms':>9} {'div-free':>9} {'leibniz':>9} {'lsd':>9} {'path gf':>9}")
    for n, k in product(range(1, cfg.max_n + 1), range(1, cfg.max_k + 1)):
        group = [r for r in rows if r.n == n and r.k == k]
        worst = {name: max(getattr(r, name) for r in group) for name in ("division_free_s", "leibniz_s", "lsd_s", "path_gf_s")}
        print(
            f"{n:>2} {k:>2} {len(group):>6} {max(r.terms for r in group):>9} "
            + " ".join(f"{worst[name]:>9.4f}" for name in ("division_free_s", "leibniz_s", "lsd_s", "path_gf_s"))
        )
    disagreements = [r for r in rows if not r.agree]
    print(f"{len(rows)} graphs, {len(disagreements)} disagreements (times are per-group maxima in seconds)")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
