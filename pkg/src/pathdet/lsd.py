"""Linear subdigraphs (cycle covers) of the complete weighted digraph of a matrix.

A linear subdigraph of [n] is a permutation written as disjoint cycles, each
in standard form (smallest vertex first).  Its signed weight against a matrix
``m`` is ``(-1)^(n + #cycles) * prod m[u, next(u)]``, and summing these gives
``det(m)``.

The cancellation machinery: a cycle is *singular* when it has a point of
singularity, which is either

* an *enclosed* vertex: a vertex v of another non-loop cycle lying strictly
  between the endpoints of a descending edge ``hi -> lo`` of this cycle, or
* an *IDI corner*: an interior local minimum of the standard form, i.e. the
  bottom of an increase-decrease-increase stretch.

A subdigraph with a singular cycle is *complex*.  :func:`involution_f` pairs
complex subdigraphs: take the singular cycle with the smallest first vertex
and its smallest point ``p``.  The map always trades the two edges

    descent_top -> descent_bottom,  inner_last -> p

for

    descent_top -> p,               inner_last -> descent_bottom

or back.  ``p`` enclosed means *merge*: the enclosing edge is
``descent_top -> descent_bottom`` and ``inner_last`` closes p's own cycle, so
the two cycles fuse.  ``p`` a corner means *split*: ``descent_top`` is p's
predecessor, and ``inner_last -> descent_bottom`` is the first edge after p
that drops below p, so the stretch from p to ``inner_last`` becomes its own
cycle.  All four edges are descending, and row u of the path matrix is the
same full sum below the diagonal, so the weight is unchanged.  The cycle
count moves by one, so the sign flips.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .config import LSD_BOUND, BoundExceeded
from .pathmatrix import PolyMatrix
from .polyring import PolyAccumulator, Polynomial

__all__ = [
    "CancellationReport",
    "Cycle",
    "CycleReport",
    "InvolutionInvariantError",
    "InvolutionStep",
    "LinearSubdigraph",
    "SingularPoint",
    "SingularityReport",
    "classify",
    "det_via_lsd",
    "enumerate_lsd",
    "involution_f",
    "involution_step",
    "lsd_signed_weight",
    "verify_cancellation",
]


class InvolutionInvariantError(RuntimeError):
    """A structural fact the involution relies on failed to hold."""


@dataclass(frozen=True)
class Cycle:
    """A directed cycle in standard form: ``vertices[0]`` is the minimum."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        if not vs:
            raise ValueError("a cycle has at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError(f"cycle repeats a vertex: {vs}")
        if vs[0] != min(vs):
            raise ValueError(f"cycle not in standard form (must start at its minimum): {vs}")

    @classmethod
    def from_walk(cls, walk: Sequence[int]) -> Cycle:
        """Rotate any cyclic listing into standard form."""
        i = walk.index(min(walk))
        return cls(tuple(walk[i:]) + tuple(walk[:i]))

    @property
    def initial(self) -> int:
        return self.vertices[0]

    @property
    def is_loop(self) -> bool:
        return len(self.vertices) == 1

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return list(zip(vs, vs[1:] + vs[:1]))

    def descending_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.edges() if u > v]

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.vertices)) + ")"


@dataclass(frozen=True)
class LinearSubdigraph:
    """Vertex-disjoint cycles covering {1, ..., n}, sorted by first vertex."""

    cycles: tuple[Cycle, ...]

    def __post_init__(self) -> None:
        cycles = tuple(sorted(self.cycles, key=lambda c: c.initial))
        object.__setattr__(self, "cycles", cycles)
        seen = [v for c in cycles for v in c.vertices]
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError(f"cycles must partition 1..n, got {seen}")

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> LinearSubdigraph:
        """``perm[i - 1]`` is the image of i."""
        n = len(perm)
        seen = [False] * (n + 1)
        cycles = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            walk = []
            v = start
            while not seen[v]:
                seen[v] = True
                walk.append(v)
                v = perm[v - 1]
            if v != start:
                raise ValueError(f"not a permutation: {perm}")
            cycles.append(Cycle(tuple(walk)))
        return cls(tuple(cycles))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> LinearSubdigraph:
        """Parse cycle notation such as ``"(1 7 6 9 10 3 2)(4 5)(8 11)"``.

        Vertices of 1..n missing from the text become loops.
        """
        groups = re.findall(r"\(([^()]*)\)", text)
        if re.sub(r"\([^()]*\)", "", text).strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [Cycle.from_walk([int(t) for t in g.replace(",", " ").split()]) for g in groups if g.strip()]
        present = {v for c in cycles for v in c.vertices}
        top = n if n is not None else max(present, default=0)
        cycles += [Cycle((v,)) for v in range(1, top + 1) if v not in present]
        return cls(tuple(cycles))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def sign(self) -> int:
        return -1 if (self.n + self.cycle_count) % 2 else 1

    def permutation(self) -> tuple[int, ...]:
        image = [0] * self.n
        for c in self.cycles:
            for u, v in c.edges():
                image[u - 1] = v
        return tuple(image)

    def cycle_of(self, v: int) -> Cycle:
        for c in self.cycles:
            if v in c:
                return c
        raise KeyError(v)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.cycles)


def enumerate_lsd(n: int, bound: int = LSD_BOUND) -> Iterator[LinearSubdigraph]:
    """All n! linear subdigraphs of [n], in lexicographic order of the permutation."""
    if n > bound:
        raise BoundExceeded("enumerate_lsd", n, bound)
    for perm in itertools.permutations(range(1, n + 1)):
        yield LinearSubdigraph.from_permutation(perm)


def lsd_signed_weight(gamma: LinearSubdigraph, m: PolyMatrix) -> tuple[int, Polynomial]:
    if gamma.n != m.n:
        raise ValueError(f"subdigraph on {gamma.n} vertices, matrix of size {m.n}")
    w = Polynomial.one()
    for c in gamma.cycles:
        for u, v in c.edges():
            w = w * m[u, v]
            if not w:
                return gamma.sign, w
    return gamma.sign, w


def _prefix_products(m: PolyMatrix) -> Iterator[tuple[tuple[int, ...], Polynomial]]:
    """(permutation, product of its first n - 1 row entries), lexicographically.

    Shares partial products between permutations with a common prefix.
    """
    n = m.n
    a = m.rows()
    perm: list[int] = []

    def walk(r: int, prefix: Polynomial, free: list[int]) -> Iterator[tuple[tuple[int, ...], Polynomial]]:
        if r == n - 1:
            yield tuple(perm + free), prefix
            return
        for idx, c in enumerate(free):
            perm.append(c)
            yield from walk(r + 1, prefix * a[r][c - 1] if prefix else prefix, free[:idx] + free[idx + 1 :])
            perm.pop()

    yield from walk(0, Polynomial.one(), list(range(1, n + 1)))


def det_via_lsd(m: PolyMatrix, bound: int = LSD_BOUND) -> Polynomial:
    """``sum over linear subdigraphs of (-1)^(n + #cycles) * weight``."""
    n = m.n
    if n > bound:
        raise BoundExceeded("det_via_lsd", n, bound)
    if n == 0:
        return Polynomial.one()
    # weight = prefix * m[n, last column]; bucket by that column, multiply once
    buckets = [PolyAccumulator() for _ in range(n)]
    for perm, prefix in _prefix_products(m):
        if prefix:
            gamma = LinearSubdigraph.from_permutation(perm)
            buckets[perm[-1] - 1].add(prefix, gamma.sign)
    total = PolyAccumulator()
    for j, acc in enumerate(buckets, start=1):
        if len(acc):
            total.add(acc.result() * m[n, j])
    return total.result()


# -- classification --------------------------------------------------------


@dataclass(frozen=True)
class SingularPoint:
    """A point of singularity of one cycle.

    ``kind == "enclosed"``: ``witness`` is the descending edge ``(hi, lo)`` of
    the enclosing cycle with ``lo < vertex < hi``.
    ``kind == "idi"``: ``witness`` is ``(start, peak, vertex, end)``, an
    increasing run start -> peak, a decreasing run peak -> vertex and an
    increasing run vertex -> end along the cycle.
    """

    vertex: int
    kind: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class CycleReport:
    cycle: Cycle
    points: tuple[SingularPoint, ...]

    @property
    def is_singular(self) -> bool:
        return bool(self.points)

    def point_vertices(self) -> set[int]:
        return {p.vertex for p in self.points}


@dataclass(frozen=True)
class SingularityReport:
    subdigraph: LinearSubdigraph
    cycles: tuple[CycleReport, ...]
    acting: CycleReport | None
    acting_point: SingularPoint | None

    @property
    def is_complex(self) -> bool:
        return self.acting is not None

    def report_for(self, cycle: Cycle) -> CycleReport:
        for r in self.cycles:
            if r.cycle == cycle:
                return r
        raise KeyError(cycle)


def _idi_corners(c: Cycle) -> list[SingularPoint]:
    seq = c.vertices + c.vertices[:1]
    out = []
    for p in range(1, len(seq) - 1):
        if not (seq[p - 1] > seq[p] < seq[p + 1]):
            continue
        q = p - 1
        while seq[q - 1] > seq[q]:
            q -= 1  # seq[0] is the minimum, so this stops at q >= 1
        r = q
        while r > 0 and seq[r - 1] < seq[r]:
            r -= 1
        s = p + 1
        while s + 1 < len(seq) and seq[s + 1] > seq[s]:
            s += 1
        out.append(SingularPoint(seq[p], "idi", (seq[r], seq[q], seq[p], seq[s])))
    return out


def _enclosed_points(c: Cycle, others: Iterable[Cycle]) -> list[SingularPoint]:
    falls = c.descending_edges()
    out = []
    for d in others:
        if d.is_loop:
            continue
        for v in d.vertices:
            witnesses = [(hi, lo) for hi, lo in falls if lo < v < hi]
            if witnesses:
                out.append(SingularPoint(v, "enclosed", min(witnesses)))
    return out


def classify(gamma: LinearSubdigraph) -> SingularityReport:
    reports = []
    for c in gamma.cycles:
        others = [d for d in gamma.cycles if d is not c]
        points = _idi_corners(c) + _enclosed_points(c, others)
        points.sort(key=lambda p: p.vertex)
        if len({p.vertex for p in points}) != len(points):
            raise InvolutionInvariantError(f"vertex is both enclosed and a corner of {c} in {gamma}")
        reports.append(CycleReport(c, tuple(points)))
    acting = next((r for r in reports if r.is_singular), None)  # cycles are sorted by first vertex
    return SingularityReport(gamma, tuple(reports), acting, acting.points[0] if acting else None)


# -- the involution --------------------------------------------------------


@dataclass(frozen=True)
class InvolutionStep:
    """One application of the involution, with the rewired edges named."""

    case: str  # "merge" (enclosed point) or "split" (IDI corner)
    source: LinearSubdigraph
    image: LinearSubdigraph
    acting_cycle: Cycle
    point: int
    descent_top: int
    descent_bottom: int
    inner_last: int

    def describe(self) -> str:
        t, b, r, p = self.descent_top, self.descent_bottom, self.inner_last, self.point
        removed, added = f"{t}->{b}, {r}->{p}", f"{t}->{p}, {r}->{b}"
        if self.case == "split":
            removed, added = added, removed
        return (
            f"{self.source} -> {self.image}: {self.case} at {p} "
            f"(acting cycle {self.acting_cycle}; edges {removed} replaced by {added})"
        )


def involution_step(gamma: LinearSubdigraph, report: SingularityReport | None = None) -> InvolutionStep:
    report = report or classify(gamma)
    if not report.is_complex:
        raise ValueError(f"{gamma} is not complex; the involution is undefined there")
    acting = report.acting
    point = report.acting_point
    assert acting is not None and point is not None
    succ = dict(zip(range(1, gamma.n + 1), gamma.permutation()))

    if point.kind == "enclosed":
        top, bottom = point.witness
        inner = gamma.cycle_of(point.vertex)
        if inner.initial != point.vertex:
            raise InvolutionInvariantError(
                f"enclosed point {point.vertex} is not the first vertex of its cycle {inner} in {gamma}"
            )
        inner_last = inner.vertices[-1]
        succ[top] = point.vertex
        succ[inner_last] = bottom
        case = "merge"
    else:
        c = point.vertex
        cyc = acting.cycle.vertices
        pos = cyc.index(c)
        top = cyc[pos - 1]
        walk = cyc[pos:] + cyc[:1]
        crossing = next(((x, y) for x, y in zip(walk, walk[1:]) if x > c > y), None)
        if crossing is None:
            raise InvolutionInvariantError(f"no edge drops below corner {c} on {acting.cycle} in {gamma}")
        inner_last, bottom = crossing
        succ[top] = bottom
        succ[inner_last] = c
        case = "split"

    image = LinearSubdigraph.from_permutation([succ[i] for i in range(1, gamma.n + 1)])
    return InvolutionStep(case, gamma, image, acting.cycle, point.vertex, top, bottom, inner_last)


def involution_f(gamma: LinearSubdigraph) -> LinearSubdigraph:
    return involution_step(gamma).image


# -- cancellation audit ----------------------------------------------------


@dataclass
class CancellationReport:
    n: int
    total: int = 0
    steps: list[InvolutionStep] = field(default_factory=list)
    complex_sum: Polynomial = field(default_factory=Polynomial.zero)
    noncomplex_sum: Polynomial = field(default_factory=Polynomial.zero)
    det: Polynomial = field(default_factory=Polynomial.zero)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def complex_count(self) -> int:
        return len(self.steps)

    def pairs(self) -> list[tuple[LinearSubdigraph, LinearSubdigraph]]:
        """Each f-orbit once, as (source, image) with source first in enumeration order."""
        seen: set[LinearSubdigraph] = set()
        out = []
        for s in self.steps:
            if s.source not in seen:
                seen.update((s.source, s.image))
                out.append((s.source, s.image))
        return out


def verify_cancellation(m: PolyMatrix, bound: int = LSD_BOUND) -> CancellationReport:
    """Audit that complex subdigraphs cancel in signed pairs under the involution.

    For every complex subdigraph gamma this checks that f(gamma) is complex,
    f(f(gamma)) == gamma, the cycle counts differ by exactly one, and the
    weights agree as polynomials.  It then checks that complex signed weights
    sum to 0 and the rest sum to ``det_leibniz(m)``.  Problems are collected
    in ``failures`` rather than raised.
    """
    from .determinant import det_leibniz

    n = m.n
    if n > bound:
        raise BoundExceeded("verify_cancellation", n, bound)
    rep = CancellationReport(n)
    if n == 0:
        rep.total = 1
        rep.noncomplex_sum = rep.det = Polynomial.one()
        return rep

    weights: dict[LinearSubdigraph, Polynomial] = {}
    reports: dict[LinearSubdigraph, SingularityReport] = {}
    complex_acc = PolyAccumulator()
    plain_buckets = [PolyAccumulator() for _ in range(n)]
    for perm, prefix in _prefix_products(m):
        rep.total += 1
        gamma = LinearSubdigraph.from_permutation(perm)
        report = classify(gamma)
        if report.is_complex:
            w = prefix * m[n, perm[-1]] if prefix else prefix
            weights[gamma] = w
            reports[gamma] = report
            complex_acc.add(w, gamma.sign)
        elif prefix:
            plain_buckets[perm[-1] - 1].add(prefix, gamma.sign)

    for gamma, report in reports.items():
        try:
            step = involution_step(gamma, report)
        except InvolutionInvariantError as exc:
            rep.failures.append(f"{gamma}: {exc}")
            continue
        rep.steps.append(step)
        image = step.image
        if image not in reports:
            rep.failures.append(f"image is not complex: {step.describe()}")
            continue
        try:
            back = involution_step(image, reports[image]).image
        except InvolutionInvariantError as exc:
            rep.failures.append(f"{image}: {exc}")
            continue
        if back != gamma:
            rep.failures.append(f"f(f(gamma)) != gamma: {gamma} -> {image} -> {back}")
        if abs(image.cycle_count - gamma.cycle_count) != 1:
            rep.failures.append(f"cycle counts differ by more than one: {step.describe()}")
        if weights[image] != weights[gamma]:
            rep.failures.append(
                f"weights differ: {step.describe()}\n  w(source) = {weights[gamma]}\n  w(image) = {weights[image]}"
            )

    rep.complex_sum = complex_acc.result()
    if rep.complex_sum:
        rep.failures.append(f"complex subdigraphs sum to {rep.complex_sum}, not 0")
    plain = PolyAccumulator()
    for j, acc in enumerate(plain_buckets, start=1):
        if len(acc):
            plain.add(acc.result() * m[n, j])
    rep.noncomplex_sum = plain.result()
    rep.det = det_leibniz(m, bound=max(n, bound))
    if rep.noncomplex_sum != rep.det:
        rep.failures.append(f"non-complex sum {rep.noncomplex_sum} differs from det {rep.det}")
    return rep
