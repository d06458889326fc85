"""Sparse multivariate polynomials over the integers.

Variables are ``x_v^{(c)}`` indexed by a (vertex, color) pair, rendered as
``x{v}_{c}``.  Internally a monomial is packed into a single Python int: each
variable owns a fixed-width exponent field whose position is the Cantor
pairing of ``(vertex - 1, color - 1)``.  Multiplying monomials is then one
integer addition, which is what keeps the permutation-sum determinants usable
at n = 7.  The packing is invisible at the interface: :meth:`Polynomial.terms`
and the text/JSON formats always speak in (Variable, exponent) factors.

Output order is graded lexicographic: total degree first, then the factor
list compared in (vertex, color) order.
"""

from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "MAX_EXPONENT",
    "Monomial",
    "Polynomial",
    "PolyAccumulator",
    "PolyParseError",
    "Variable",
    "poly_add",
    "poly_format",
    "poly_from_json",
    "poly_mul",
    "poly_neg",
    "poly_parse",
    "poly_to_json",
]

_FIELD = 16
_MASK = (1 << _FIELD) - 1
# Top bit of every field is a guard: a carry into it means an exponent overflowed.
MAX_EXPONENT = (1 << (_FIELD - 1)) - 1


@dataclass(frozen=True, order=True)
class Variable:
    """The indeterminate ``x_vertex^{(color)}``; ordered by (vertex, color)."""

    vertex: int
    color: int

    def __post_init__(self) -> None:
        if isinstance(self.vertex, bool) or not isinstance(self.vertex, int):
            raise TypeError(f"vertex must be an int, got {self.vertex!r}")
        if isinstance(self.color, bool) or not isinstance(self.color, int):
            raise TypeError(f"color must be an int, got {self.color!r}")
        if self.vertex < 1 or self.color < 1:
            raise ValueError(f"variable indices must be >= 1, got ({self.vertex}, {self.color})")

    def __str__(self) -> str:
        return f"x{self.vertex}_{self.color}"


# A monomial as seen from outside: (Variable, exponent) pairs, variables
# strictly increasing, exponents positive.  The empty tuple is the monomial 1.
Monomial = tuple[tuple[Variable, int], ...]


def _slot(vertex: int, color: int) -> int:
    s = vertex + color - 2
    return s * (s + 1) // 2 + color - 1


def _unslot(slot: int) -> Variable:
    # inverse Cantor pairing
    s = int(((8 * slot + 1) ** 0.5 - 1) // 2)
    while s * (s + 1) // 2 > slot:
        s -= 1
    while (s + 1) * (s + 2) // 2 <= slot:
        s += 1
    b = slot - s * (s + 1) // 2
    return Variable(s - b + 1, b + 1)


def _pack(factors: Iterable[tuple[Variable, int]]) -> int:
    key = 0
    for var, exp in factors:
        if isinstance(exp, bool) or not isinstance(exp, int) or exp < 0:
            raise ValueError(f"exponent must be a non-negative int, got {exp!r}")
        key += exp << (_FIELD * _slot(var.vertex, var.color))
    if key & _guard_mask(key):
        raise OverflowError(f"exponent exceeds {MAX_EXPONENT}")
    return key


@lru_cache(maxsize=None)
def _guard_for_fields(nfields: int) -> int:
    return sum(1 << (_FIELD * i + _FIELD - 1) for i in range(nfields))


def _guard_mask(key: int) -> int:
    return _guard_for_fields(key.bit_length() // _FIELD + 1)


def _unpack(key: int) -> Monomial:
    factors = []
    slot = 0
    while key:
        exp = key & _MASK
        if exp:
            factors.append((_unslot(slot), exp))
        key >>= _FIELD
        slot += 1
    factors.sort()
    return tuple(factors)


def _order_key(mono: Monomial) -> tuple:
    degree = sum(e for _, e in mono)
    expanded = tuple((v.vertex, v.color) for v, e in mono for _ in range(e))
    return degree, expanded


class Polynomial:
    """Immutable element of ``Z[x_v^{(c)}]``.

    Equality is equality of canonical term maps; polynomials are hashable.
    Build them with :meth:`var`, :meth:`constant`, :meth:`from_terms` or
    :func:`poly_parse`, and combine with ``+``, ``-``, ``*`` and ``**``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None) -> None:
        # Private constructor: ``terms`` maps packed monomials to nonzero ints.
        self._terms: dict[int, int] = {} if terms is None else dict(terms)
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[int, int]) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._wrap({})

    @classmethod
    def one(cls) -> Polynomial:
        return cls._wrap({0: 1})

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"coefficients are integers, got {c!r}")
        return cls._wrap({0: c} if c else {})

    @classmethod
    def var(cls, vertex: int, color: int) -> Polynomial:
        v = Variable(vertex, color)
        return cls._wrap({_pack([(v, 1)]): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Sequence[tuple[Variable, int]], int]]) -> Polynomial:
        """Build from ``(factors, coeff)`` pairs; repeated variables multiply."""
        out: dict[int, int] = {}
        for factors, coeff in terms:
            if isinstance(coeff, bool) or not isinstance(coeff, int):
                raise TypeError(f"coefficients are integers, got {coeff!r}")
            key = _pack(factors)
            out[key] = out.get(key, 0) + coeff
        return cls._wrap({m: c for m, c in out.items() if c})

    @classmethod
    def sum_of_vars(cls, vertex: int, colors: Iterable[int]) -> Polynomial:
        """``sum_{c in colors} x_vertex^{(c)}`` (each color counted once)."""
        return cls._wrap({_pack([(Variable(vertex, c), 1)]): 1 for c in set(colors)})

    # -- inspection -------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical (graded lexicographic) order."""
        items = [(_unpack(m), c) for m, c in self._terms.items()]
        items.sort(key=lambda t: _order_key(t[0]))
        return items

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_constant(self) -> bool:
        return all(m == 0 for m in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.terms()]

    def variables(self) -> set[Variable]:
        return {v for mono, _ in self.terms() for v, _ in mono}

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e for _, e in _unpack(m)) for m in self._terms)

    def coefficient(self, factors: Sequence[tuple[Variable, int]]) -> int:
        return self._terms.get(_pack(factors), 0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        get = out.get
        for m, c in b.items():
            s = get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial._wrap({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((mb, cb),) = b.items()
            if cb == 1:
                out = {ma + mb: ca for ma, ca in a.items()}
            else:
                out = {ma + mb: ca * cb for ma, ca in a.items()}
        else:
            out = {}
            get = out.get
            for mb, cb in b.items():
                for ma, ca in a.items():
                    m = ma + mb
                    out[m] = get(m, 0) + ca * cb
            out = {m: c for m, c in out.items() if c}
        if out:
            guard = _guard_mask(max(out))
            if any(m & guard for m in out):
                raise OverflowError(f"exponent exceeds {MAX_EXPONENT}")
        return Polynomial._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Polynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({poly_format(self)!r})"

    def __str__(self) -> str:
        return poly_format(self)


class PolyAccumulator:
    """Mutable running sum of polynomials; call :meth:`result` when done.

    Local scratch space for long summations, where rebuilding an immutable
    :class:`Polynomial` on every ``+`` would copy the partial sum each time.
    """

    __slots__ = ("_terms",)

    def __init__(self) -> None:
        self._terms: dict[int, int] = {}

    def add(self, p: Polynomial, sign: int = 1) -> None:
        out = self._terms
        get = out.get
        if sign == 1:
            for m, c in p._terms.items():
                out[m] = get(m, 0) + c
        else:
            for m, c in p._terms.items():
                out[m] = get(m, 0) + sign * c

    def __len__(self) -> int:
        return len(self._terms)

    def result(self) -> Polynomial:
        return Polynomial._wrap({m: c for m, c in self._terms.items() if c})


def _coerce(x: object) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Polynomial.constant(x)
    return NotImplemented


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


# -- text format ---------------------------------------------------------


def _format_monomial(mono: Monomial) -> str:
    return "*".join(f"{v}^{e}" if e > 1 else str(v) for v, e in mono)


def poly_format(p: Polynomial) -> str:
    """Render ``p`` canonically, e.g. ``"1 + 2*x2_1 - x1_1*x3_2^2"``."""
    terms = p.terms()
    if not terms:
        return "0"
    parts: list[str] = []
    for idx, (mono, coeff) in enumerate(terms):
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = _format_monomial(mono)
        else:
            body = f"{mag}*{_format_monomial(mono)}"
        if idx == 0:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'} {body}")
    return " ".join(parts)


class PolyParseError(ValueError):
    """Malformed polynomial text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x(?P<v>\d+)_(?P<c>\d+))|(?P<op>[-+*^]))")


def _tokenize(s: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    pos = 0
    end = len(s.rstrip())
    while pos < end:
        m = _TOKEN.match(s, pos)
        if m is None or m.end() == pos:
            bad = pos + (len(s[pos:]) - len(s[pos:].lstrip()))
            raise PolyParseError(f"unexpected character {s[bad]!r}", bad)
        start = m.end() - len(m.group(0).lstrip())
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), start))
        elif m.group("var") is not None:
            v, c = int(m.group("v")), int(m.group("c"))
            if v < 1 or c < 1:
                raise PolyParseError(f"variable index must be >= 1 in {m.group('var')!r}", start)
            tokens.append(("var", Variable(v, c), start))
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    return tokens


def poly_parse(s: str) -> Polynomial:
    """Inverse of :func:`poly_format`; whitespace-tolerant.

    Accepts a sum of terms, each an optional integer coefficient followed by
    ``*``-separated factors ``x{v}_{c}`` with optional ``^e``.  A repeated
    variable inside one term multiplies (``x2_1*x2_1`` is ``x2_1^2``).
    """
    tokens = _tokenize(s)
    if not tokens:
        raise PolyParseError("empty polynomial", 0)
    out: dict[int, int] = {}
    i = 0
    n = len(tokens)

    def expect_factor(j: int) -> tuple[int, int, int]:
        # returns (coeff_part, packed_part, next_index) for one factor
        if j >= n:
            raise PolyParseError("expected a factor", len(s))
        kind, val, pos = tokens[j]
        if kind == "int":
            return val, 0, j + 1  # type: ignore[return-value]
        if kind != "var":
            raise PolyParseError(f"expected a factor, got {val!r}", pos)
        exp = 1
        j += 1
        if j < n and tokens[j][:2] == ("op", "^"):
            if j + 1 >= n or tokens[j + 1][0] != "int":
                raise PolyParseError("expected an integer exponent", tokens[j][2])
            exp = tokens[j + 1][1]  # type: ignore[assignment]
            if exp > MAX_EXPONENT:
                raise PolyParseError(f"exponent exceeds {MAX_EXPONENT}", tokens[j + 1][2])
            j += 2
        return 1, _pack([(val, exp)]), j  # type: ignore[list-item]

    first = True
    while i < n:
        sign = 1
        kind, val, pos = tokens[i]
        if kind == "op" and val in "+-":
            if val == "-":
                sign = -1
            i += 1
        elif not first:
            raise PolyParseError(f"expected '+' or '-', got {val!r}", pos)
        first = False
        coeff, key, i = expect_factor(i)
        coeff *= sign
        while i < n and tokens[i][:2] == ("op", "*"):
            c, k, i = expect_factor(i + 1)
            coeff *= c
            key += k
        if key and key & _guard_mask(key):
            raise PolyParseError(f"exponent exceeds {MAX_EXPONENT}", pos)
        out[key] = out.get(key, 0) + coeff
    return Polynomial._wrap({m: c for m, c in out.items() if c})


# -- JSON form -----------------------------------------------------------


def poly_to_json(p: Polynomial) -> list[dict]:
    """``[{"coeff": "3", "monomial": [[v, c, e], ...]}, ...]`` in canonical order."""
    return [
        {"coeff": str(coeff), "monomial": [[v.vertex, v.color, e] for v, e in mono]}
        for mono, coeff in p.terms()
    ]


def poly_from_json(data: list[dict]) -> Polynomial:
    terms = []
    for item in data:
        if set(item) != {"coeff", "monomial"}:
            raise ValueError(f"bad polynomial term {item!r}")
        factors = [(Variable(v, c), e) for v, c, e in item["monomial"]]
        terms.append((factors, int(item["coeff"])))
    return Polynomial.from_terms(terms)
