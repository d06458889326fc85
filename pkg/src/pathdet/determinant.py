"""Exact determinants of polynomial matrices.

Two independent routes:

* :func:`det_leibniz` sums sign(sigma) * prod_i m[i, sigma(i)] over every
  permutation.  It is the oracle, refused above ``ORACLE_BOUND``.
* :func:`det_division_free` never divides, so it is valid over any
  commutative ring.  The default ``"minors"`` method expands row by row and
  memoizes every leading minor by its column set (n * 2^(n-1)
  multiplications).  ``"clow"`` is the Mahajan-Vinay clow-sequence program
  (O(n^4) ring operations); it does far fewer operations, but its
  intermediate sums range over closed walks that reuse rows.  For the path
  matrices this package builds, that means squared variables that cancel
  only at the very end, and the minors method is orders of magnitude faster
  at n = 7.
"""

from __future__ import annotations

import logging
from collections import defaultdict

from .config import ORACLE_BOUND, TERM_LIMIT, BoundExceeded, TermLimitExceeded
from .pathmatrix import PolyMatrix
from .polyring import PolyAccumulator, Polynomial

__all__ = ["METHODS", "det_division_free", "det_leibniz"]

log = logging.getLogger(__name__)


def det_leibniz(m: PolyMatrix, bound: int = ORACLE_BOUND) -> Polynomial:
    """Permutation-expansion determinant.

    Permutations are walked depth-first by row so that products of a shared
    prefix are computed once, and a branch stops as soon as it meets a zero
    entry (every permutation through it contributes 0).  The final row is
    factored out: each permutation adds ``sign * prefix`` to the bucket of
    the column its last row uses, and the buckets are multiplied by the
    last-row entries at the end.
    """
    n = m.n
    if n > bound:
        raise BoundExceeded("det_leibniz", n, bound, "use det_division_free for larger matrices")
    if n == 0:
        return Polynomial.one()
    a = m.rows()
    last = n - 1
    buckets = [PolyAccumulator() for _ in range(n)]
    full = (1 << n) - 1

    def walk(r: int, prefix: Polynomial, used: int, parity: int) -> None:
        if r == last:
            j = (full ^ used).bit_length() - 1
            if a[last][j]:
                # columns greater than j are all used: n-1-j more inversions
                buckets[j].add(prefix, -1 if (parity ^ (last - j)) & 1 else 1)
            return
        for c in range(n):
            if used >> c & 1:
                continue
            e = a[r][c]
            if not e:
                continue
            inversions = bin(used >> (c + 1)).count("1")
            walk(r + 1, prefix * e, used | (1 << c), parity ^ (inversions & 1))

    walk(0, Polynomial.one(), 0, 0)
    total = PolyAccumulator()
    for j in range(n):
        if len(buckets[j]):
            total.add(buckets[j].result() * a[last][j])
    return total.result()


METHODS = ("minors", "clow")


def det_division_free(m: PolyMatrix, term_limit: int = TERM_LIMIT, method: str = "minors") -> Polynomial:
    """Division-free determinant; see the module docstring for ``method``.

    Raises :class:`TermLimitExceeded` when an intermediate polynomial has
    more than ``term_limit`` terms.
    """
    if method == "minors":
        return _det_minors(m, term_limit)
    if method == "clow":
        return _det_clow(m, term_limit)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")


def _det_minors(m: PolyMatrix, term_limit: int) -> Polynomial:
    # minors[S] = det of rows 0..r-1 against the column set S (a bitmask, |S| = r)
    n = m.n
    a = m.rows()
    minors: dict[int, Polynomial] = {0: Polynomial.one()}
    for r in range(n):
        row = a[r]
        nxt: dict[int, PolyAccumulator] = defaultdict(PolyAccumulator)
        for cols, val in minors.items():
            for c in range(n):
                if cols >> c & 1 or not row[c]:
                    continue
                # new column c lands after every chosen column greater than it
                sign = -1 if bin(cols >> (c + 1)).count("1") & 1 else 1
                nxt[cols | 1 << c].add(val * row[c], sign)
        minors = {}
        biggest = 0
        for cols, acc in nxt.items():
            p = acc.result()
            if p:
                minors[cols] = p
                biggest = max(biggest, len(p))
        log.debug("minor layer %d: %d minors, largest %d terms", r + 1, len(minors), biggest)
        if biggest > term_limit:
            raise TermLimitExceeded(biggest, term_limit, f"minor layer {r + 1}")
    return minors.get((1 << n) - 1, Polynomial.zero())


def _det_clow(m: PolyMatrix, term_limit: int) -> Polynomial:
    """Determinant by clow sequences (Mahajan and Vinay, 1997).

    A clow is a closed walk whose first vertex (its head) is strictly smaller
    than every other vertex on it; a clow sequence is a list of clows with
    increasing heads and total length n, signed by (-1)^(n + #clows).  The sum
    over clow sequences equals the determinant because the non-permutation
    sequences cancel in pairs.  The state after ``l`` edges is (head of the
    open clow, current vertex).
    """
    n = m.n
    if n == 0:
        return Polynomial.one()
    a = m.rows()
    one = Polynomial.one()
    layer: dict[tuple[int, int], Polynomial] = {(h, h): one for h in range(n)}
    for step in range(n):
        nxt: dict[tuple[int, int], PolyAccumulator] = defaultdict(PolyAccumulator)
        closed = [PolyAccumulator() for _ in range(n)]
        for (h, u), val in layer.items():
            row = a[u]
            for v in range(h + 1, n):
                if row[v]:
                    nxt[(h, v)].add(val * row[v])
            if row[h]:
                closed[h].add(val * row[h], -1)
        if step == n - 1:
            total = PolyAccumulator()
            for acc in closed:
                total.add(acc.result())
            det = total.result()
            return det if n % 2 == 0 else -det
        # a closed clow with head h may be followed by a new clow with any head > h
        running = PolyAccumulator()
        for h2 in range(n):
            if len(running):
                nxt[(h2, h2)].add(running.result())
            running.add(closed[h2].result())
        layer = {}
        biggest = 0
        for key, acc in nxt.items():
            p = acc.result()
            if p:
                layer[key] = p
                biggest = max(biggest, len(p))
        log.debug("clow layer %d: %d states, largest %d terms", step + 1, len(layer), biggest)
        if biggest > term_limit:
            raise TermLimitExceeded(biggest, term_limit, f"clow layer {step + 1}")
    raise AssertionError("unreachable")
