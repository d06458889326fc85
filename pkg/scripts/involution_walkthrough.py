"""Classify the eleven-vertex example cover and show both directions of the involution."""

from __future__ import annotations

import argparse

from pathdet import LinearSubdigraph, classify, involution_step

DEFAULT = "(1 7 6 9 10 3 2)(4 5)(8 11)"


def show(gamma: LinearSubdigraph) -> None:
    report = classify(gamma)
    print(f"cover {gamma}  (cycles: {gamma.cycle_count}, sign {'+' if gamma.sign > 0 else '-'})")
    for r in report.cycles:
        if r.cycle.is_loop:
            continue
        pts = ", ".join(f"{p.vertex} {p.kind} via {p.witness}" for p in r.points) or "none"
        print(f"  {r.cycle}: {pts}")
    if report.is_complex:
        print(f"  acting cycle {report.acting.cycle}, point {report.acting_point.vertex}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("cover", nargs="?", default=DEFAULT, help="cycle notation")
    gamma = LinearSubdigraph.parse(p.parse_args().cover)
    show(gamma)
    if not classify(gamma).is_complex:
        print("not complex; the involution does not act")
        return
    step = involution_step(gamma)
    print(step.describe())
    show(step.image)
    back = involution_step(step.image)
    print(back.describe())
    print("round trip ok" if back.image == gamma else "ROUND TRIP BROKEN")


if __name__ == "__main__":
    main()
