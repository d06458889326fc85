"""Resource bounds shared by the library and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

# permutation-sum oracles (det_leibniz) refuse n above this
ORACLE_BOUND = 8
# linear-subdigraph enumeration refuses n above this
LSD_BOUND = 8
# division-free determinant aborts once an intermediate polynomial exceeds this many terms
TERM_LIMIT = 2_000_000


@dataclass(frozen=True)
class Limits:
    oracle_bound: int = ORACLE_BOUND
    lsd_bound: int = LSD_BOUND
    term_limit: int = TERM_LIMIT


class BoundExceeded(Exception):
    """A computation was refused because ``n`` exceeds a configured bound."""

    def __init__(self, what: str, n: int, bound: int, hint: str = "") -> None:
        msg = f"{what}: n={n} exceeds bound {bound}"
        if hint:
            msg += f"; {hint}"
        super().__init__(msg)
        self.what = what
        self.n = n
        self.bound = bound


class TermLimitExceeded(Exception):
    """An intermediate polynomial grew past the configured term ceiling."""

    def __init__(self, terms: int, limit: int, stage: str) -> None:
        super().__init__(f"{stage}: intermediate polynomial has {terms} terms, limit {limit}")
        self.terms = terms
        self.limit = limit
        self.stage = stage
