"""Boolean monomials as bitmasks and multilinear polynomials over F2.

A monomial is a plain ``int``: bit ``nvars - i`` is set when variable ``x_i``
occurs, so ``x1`` sits on the highest used bit and lex order (x1 > x2 > ...)
coincides with unsigned integer comparison.  The constant monomial ``1`` is
mask ``0``.

A :class:`Polynomial` is a strictly descending tuple of distinct masks; the
empty tuple is zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VARS = 64

Monomial = int
Point = int


class ParseError(ValueError):
    """Malformed polynomial text or unknown variable name."""

    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.message = message
        self.pos = pos
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"col {pos + 1}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


@dataclass(frozen=True)
class Ring:
    """Variable count and names; fixes the bit layout of monomials."""

    nvars: int
    var_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not 1 <= self.nvars <= MAX_VARS:
            raise ValueError(f"nvars must be in [1, {MAX_VARS}], got {self.nvars}")
        names = tuple(self.var_names) or tuple(f"x{i}" for i in range(1, self.nvars + 1))
        if len(names) != self.nvars:
            raise ValueError(f"expected {self.nvars} variable names, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for name in names:
            if not _IDENT.fullmatch(name):
                raise ValueError(f"bad variable name {name!r}")
        object.__setattr__(self, "var_names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names, 1)})

    @property
    def full_mask(self) -> int:
        return (1 << self.nvars) - 1

    def bit(self, i: int) -> int:
        """Mask of variable ``x_i`` (1-based)."""
        if not 1 <= i <= self.nvars:
            raise IndexError(f"variable index {i} out of range 1..{self.nvars}")
        return 1 << (self.nvars - i)

    def index_of_bit(self, bit: int) -> int:
        return self.nvars - bit.bit_length() + 1

    def var_index(self, name: str) -> int:
        return self._index[name]

    def var(self, name_or_index: str | int) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self.var_index(name_or_index)
        return Polynomial.from_sorted((self.bit(i),))

    def variables(self, mask: int) -> list[int]:
        """1-based indices of the variables in ``mask``, x1 first."""
        return [i for i in range(1, self.nvars + 1) if mask >> (self.nvars - i) & 1]


# --- monomials -------------------------------------------------------------


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of two monomials; in the Boolean ring this is also their lcm."""
    return a | b


mono_lcm = mono_mul


def mono_divides(m: Monomial, d: Monomial) -> bool:
    """True when ``d`` divides ``m``."""
    return d & ~m == 0


def mono_div(m: Monomial, d: Monomial) -> Monomial:
    if d & ~m:
        raise ArithmeticError(f"monomial {d:#b} does not divide {m:#b}")
    return m ^ d


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return a & b == 0


def mono_cmp(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 according to lex order."""
    return (a > b) - (a < b)


def degree(m: Monomial) -> int:
    return m.bit_count()


def eval_mono(m: Monomial, p: Point) -> int:
    return int(m & p == m)


# --- polynomials -----------------------------------------------------------


def _cancel_pairs(masks: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for m in masks:
        if m in out:
            out.remove(m)
        else:
            out.add(m)
    return out


class Polynomial:
    """Multilinear polynomial over F2, stored as descending monomial masks."""

    __slots__ = ("terms",)

    def __init__(self, monomials: Iterable[int] = ()):
        self.terms: tuple[int, ...] = tuple(sorted(_cancel_pairs(monomials), reverse=True))

    @classmethod
    def from_sorted(cls, terms: tuple[int, ...]) -> Polynomial:
        # caller guarantees strictly descending, distinct
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def one(cls) -> Polynomial:
        return cls.from_sorted((0,))

    @classmethod
    def zero(cls) -> Polynomial:
        return cls.from_sorted(())

    @property
    def lt(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    @property
    def tail(self) -> Polynomial:
        return Polynomial.from_sorted(self.terms[1:])

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == (0,)

    def is_constant(self) -> bool:
        return not self.terms or self.terms == (0,)

    def degree(self) -> int:
        return max((t.bit_count() for t in self.terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, int) and other in (0, 1):
            return self.terms == ((0,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: Polynomial) -> Polynomial:
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"Polynomial({[bin(t) for t in self.terms]})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    """Sum over F2: identical monomials cancel."""
    return Polynomial.from_sorted(tuple(sorted(set(f.terms) ^ set(g.terms), reverse=True)))


def mono_poly_mul(m: Monomial, f: Polynomial) -> Polynomial:
    """Multiply every term by ``m`` with OR, then cancel duplicate pairs."""
    return Polynomial(m | t for t in f.terms)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return Polynomial(a | b for a in f.terms for b in g.terms)


def eval_poly(f: Polynomial, p: Point) -> int:
    """Value (0 or 1) of ``f`` at the 0/1 point ``p`` (same bit layout as monomials)."""
    v = 0
    for t in f.terms:
        if t & p == t:
            v ^= 1
    return v


# --- text ------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[+*^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return toks


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse ``x*y + z`` style text.

    Besides the plain grammar, a literal ``0`` term and ``x^k`` powers are
    accepted; powers collapse to ``x`` (or ``1`` for ``k = 0``).
    """
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial", 0)
    masks: list[int] = []
    k = 0

    def expect_factor() -> tuple[int | None, bool]:
        # returns (mask, is_literal_constant)
        nonlocal k
        if k >= len(toks):
            raise ParseError("unexpected end of input", len(text))
        kind, val, pos = toks[k]
        k += 1
        if kind == "ident":
            try:
                mask = ring.bit(ring.var_index(val))
            except KeyError:
                raise ParseError(f"unknown variable {val!r}", pos) from None
            if k < len(toks) and toks[k][1] == "^":
                if k + 1 >= len(toks) or toks[k + 1][0] != "int":
                    raise ParseError("expected exponent after '^'", toks[k][2])
                if int(toks[k + 1][1]) == 0:
                    mask = 0
                k += 2
            return mask, False
        if kind == "int":
            if val == "1":
                return 0, True
            if val == "0":
                return None, True
            raise ParseError(f"coefficient {val} is not allowed", pos)
        raise ParseError(f"unexpected {val!r}", pos)

    while True:
        mask, literal = expect_factor()
        while k < len(toks) and toks[k][1] == "*":
            if literal:
                raise ParseError("constants cannot be multiplied", toks[k][2])
            k += 1
            nxt, lit2 = expect_factor()
            if lit2:
                raise ParseError("constants cannot be multiplied", toks[k - 1][2])
            mask |= nxt
        if mask is not None:
            masks.append(mask)
        if k == len(toks):
            break
        kind, val, pos = toks[k]
        if val != "+":
            raise ParseError(f"expected '+' but found {val!r}", pos)
        k += 1
        if k == len(toks):
            raise ParseError("dangling '+'", pos)
    return Polynomial(masks)


def render_mono(m: Monomial, ring: Ring) -> str:
    if m == 0:
        return "1"
    return "*".join(ring.var_names[i - 1] for i in ring.variables(m))


def render_poly(f: Polynomial, ring: Ring) -> str:
    if not f.terms:
        return "0"
    return " + ".join(render_mono(t, ring) for t in f.terms)


_HEADER = re.compile(r"\s*ring\s+(\d+)\s*(?::\s*(.*?))?\s*$")


def parse_header(line: str, lineno: int = 1) -> Ring:
    m = _HEADER.fullmatch(line)
    if m is None:
        raise ParseError("expected header 'ring N [: names...]'", 0, lineno)
    n = int(m.group(1))
    names = tuple(m.group(2).split()) if m.group(2) else ()
    try:
        return Ring(n, names)
    except ValueError as exc:
        raise ParseError(str(exc), 0, lineno) from None


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def split_header(text: str) -> tuple[Ring, list[tuple[int, str]]]:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'ring' header", 0, 1)
    lineno, head = lines[0]
    return parse_header(head, lineno), lines[1:]


def parse_poly_file(text: str) -> tuple[Ring, list[Polynomial]]:
    """Read a header line followed by one polynomial per line."""
    ring, body = split_header(text)
    polys = []
    for lineno, line in body:
        try:
            polys.append(parse_poly(line, ring))
        except ParseError as exc:
            raise ParseError(exc.message, exc.pos, lineno) from None
    return ring, polys


def render_header(ring: Ring) -> str:
    default = tuple(f"x{i}" for i in range(1, ring.nvars + 1))
    if ring.var_names == default:
        return f"ring {ring.nvars}"
    return f"ring {ring.nvars} : {' '.join(ring.var_names)}"


def render_poly_file(ring: Ring, polys: Iterable[Polynomial]) -> str:
    lines = [render_header(ring)]
    lines.extend(render_poly(f, ring) for f in polys)
    return "\n".join(lines) + "\n"
