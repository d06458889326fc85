"""Count complex cycle covers per n and check the edge-swap involution on all of them.

    python scripts/involution_census.py --max-n 8
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from dataclasses import dataclass

from pathdet import classify, enumerate_lsd, involution_step


@dataclass(frozen=True)
class CensusConfig:
    max_n: int = 7


def census(n: int) -> tuple[int, Counter, list[str]]:
    total, cases, problems = 0, Counter(), []
    for gamma in enumerate_lsd(n, bound=max(n, 8)):
        total += 1
        report = classify(gamma)
        if not report.is_complex:
            continue
        step = involution_step(gamma, report)
        cases[(step.case, report.acting_point.kind)] += 1
        image_report = classify(step.image)
        back = involution_step(step.image, image_report)
        if back.image != gamma or image_report.acting_point.vertex != report.acting_point.vertex:
            problems.append(f"{gamma} -> {step.image} -> {back.image}")
    return total, cases, problems


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=CensusConfig.max_n)
    cfg = CensusConfig(max_n=p.parse_args().max_n)
    print(f"{'n':>2} {'covers':>7} {'complex':>8} {'merges':>7} {'splits':>7} {'failures':>8} {'secs':>6}")
    bad = 0
    for n in range(1, cfg.max_n + 1):
        t = time.perf_counter()
        total, cases, problems = census(n)
        merges = sum(v for (case, _), v in cases.items() if case == "merge")
        splits = sum(v for (case, _), v in cases.items() if case == "split")
        print(f"{n:>2} {total:>7} {merges + splits:>8} {merges:>7} {splits:>7} {len(problems):>8} {time.perf_counter() - t:>6.1f}")
        for line in problems[:3]:
            print("   ", line)
        bad += len(problems)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
