"""Turn application problems into generator lists over a Boolean ring.

* Shidoku (4x4 Sudoku) as a one-hot system in 64 variables.
* Fixed points of a Boolean update map ``x_i <- f_i(x)``.
* Seeded random ideals, drawn from SplitMix64 so instances are
  reproducible in any language.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .ring import ParseError, Polynomial, Ring, eval_poly, parse_poly, split_header

# --- Shidoku ---------------------------------------------------------------

SHIDOKU_RING = Ring(64)


@dataclass(frozen=True)
class ShidokuPuzzle:
    """Row-major 4x4 grid; 0 marks an empty cell."""

    cells: tuple[int, ...] = (0,) * 16

    def __post_init__(self):
        if len(self.cells) != 16:
            raise ValueError(f"a Shidoku grid has 16 cells, got {len(self.cells)}")
        if any(v not in (0, 1, 2, 3, 4) for v in self.cells):
            raise ValueError("cell values must be 0 (empty) or 1..4")

    def clue(self, r: int, c: int) -> int:
        return self.cells[(r - 1) * 4 + (c - 1)]

    def clues(self) -> list[tuple[int, int, int]]:
        return [(k // 4 + 1, k % 4 + 1, v) for k, v in enumerate(self.cells) if v]

    def __str__(self) -> str:
        rows = ("".join(str(v) if v else "." for v in self.cells[r * 4:r * 4 + 4]) for r in range(4))
        return "\n".join(rows)


def parse_clues(text: str) -> ShidokuPuzzle:
    """Parse 16 characters from ``1234.`` (whitespace ignored), row-major."""
    cells = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == ".":
            cells.append(0)
        elif ch in "1234":
            cells.append(int(ch))
        else:
            raise ParseError(f"illegal clue character {ch!r}", pos)
    if len(cells) != 16:
        raise ParseError(f"expected 16 clue characters, got {len(cells)}", len(text))
    return ShidokuPuzzle(tuple(cells))


def shidoku_var(r: int, c: int, v: int) -> int:
    """1-based variable index of "cell (r, c) holds v"."""
    return ((r - 1) * 4 + (c - 1)) * 4 + v


def shidoku_units() -> list[list[tuple[int, int]]]:
    rows = [[(r, c) for c in range(1, 5)] for r in range(1, 5)]
    cols = [[(r, c) for r in range(1, 5)] for c in range(1, 5)]
    blocks = [
        [(r, c) for r in (br, br + 1) for c in (bc, bc + 1)]
        for br in (1, 3)
        for bc in (1, 3)
    ]
    return rows + cols + blocks


def encode_shidoku(puzzle: ShidokuPuzzle) -> tuple[Ring, list[Polynomial]]:
    ring = SHIDOKU_RING
    x = ring.bit
    gens: dict[Polynomial, None] = {}

    def add(*monomials: int):
        gens.setdefault(Polynomial(monomials), None)

    cells = [(r, c) for r in range(1, 5) for c in range(1, 5)]
    for r, c in cells:
        add(*(x(shidoku_var(r, c, v)) for v in range(1, 5)), 0)
    for r, c in cells:
        for v, w in itertools.combinations(range(1, 5), 2):
            add(x(shidoku_var(r, c, v)) | x(shidoku_var(r, c, w)))
    for unit in shidoku_units():
        for v in range(1, 5):
            for (r1, c1), (r2, c2) in itertools.combinations(unit, 2):
                add(x(shidoku_var(r1, c1, v)) | x(shidoku_var(r2, c2, v)))
    for r, c, v in puzzle.clues():
        add(x(shidoku_var(r, c, v)), 0)
    return ring, list(gens)


def grid_to_point(grid: tuple[int, ...]) -> int:
    """One-hot point of a filled row-major grid."""
    p = 0
    for k, v in enumerate(grid):
        p |= SHIDOKU_RING.bit(k * 4 + v)
    return p


def point_to_grid(p: int) -> tuple[int, ...] | None:
    """Inverse of :func:`grid_to_point`; None unless every cell is exactly one-hot."""
    grid = []
    for k in range(16):
        vals = [v for v in range(1, 5) if p & SHIDOKU_RING.bit(k * 4 + v)]
        if len(vals) != 1:
            return None
        grid.append(vals[0])
    return tuple(grid)


def decode_linear_basis(basis: list[Polynomial], ring: Ring = SHIDOKU_RING) -> int | None:
    """Point fixed by a basis of ``nvars`` polynomials ``x_i`` or ``x_i + 1``, else None."""
    if len(basis) != ring.nvars:
        return None
    p = 0
    seen = 0
    for g in basis:
        t = g.terms
        if not (len(t) in (1, 2) and t[0].bit_count() == 1 and t[1:] in ((), (0,))):
            return None
        seen |= t[0]
        if len(t) == 2:
            p |= t[0]
    return p if seen == ring.full_mask else None


# --- Boolean models --------------------------------------------------------


@dataclass(frozen=True)
class BooleanModel:
    ring: Ring
    updates: tuple[tuple[int, Polynomial], ...]

    def __post_init__(self):
        targets = [i for i, _ in self.updates]
        if len(set(targets)) != len(targets):
            raise ValueError("update targets must be distinct")
        for i, f in self.updates:
            self.ring.bit(i)
            if f and f.terms[0] & ~self.ring.full_mask:
                raise ValueError("update polynomial outside the model ring")

    def step(self, state: int) -> int:
        """Synchronous update of every target; untargeted variables keep their value."""
        nxt = state
        for i, f in self.updates:
            bit = self.ring.bit(i)
            if eval_poly(f, state):
                nxt |= bit
            else:
                nxt &= ~bit
        return nxt


def fixed_point_ideal(model: BooleanModel) -> list[Polynomial]:
    """Generators ``f_i + x_i``; identity updates give zero and are dropped."""
    gens = []
    for i, f in model.updates:
        g = f + model.ring.var(i)
        if g:
            gens.append(g)
    return gens


def parse_model(text: str) -> BooleanModel:
    """Parse a ring header followed by ``name = poly`` lines."""
    ring, body = split_header(text)
    updates = []
    seen: dict[int, int] = {}
    for lineno, line in body:
        target, eq, rhs = line.partition("=")
        if not eq:
            raise ParseError("expected 'name = polynomial'", 0, lineno)
        name = target.strip()
        try:
            i = ring.var_index(name)
        except KeyError:
            raise ParseError(f"unknown target variable {name!r}", 0, lineno) from None
        if i in seen:
            raise ParseError(f"duplicate update for {name!r} (first on line {seen[i]})", 0, lineno)
        seen[i] = lineno
        try:
            f = parse_poly(rhs, ring)
        except ParseError as exc:
            offset = len(target) + 1
            raise ParseError(exc.message, None if exc.pos is None else exc.pos + offset, lineno) from None
        updates.append((i, f))
    return BooleanModel(ring, tuple(updates))


# --- random ideals ---------------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014).

    ``state += 0x9E3779B97F4A7C15``; output is ``z = state``, then
    ``z = (z ^ z>>30) * 0xBF58476D1CE4E5B9``, ``z = (z ^ z>>27) * 0x94D049BB133111EB``,
    ``z ^ z>>31``, all mod 2^64.  ``below(n)`` is ``next() % n``.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n


@dataclass(frozen=True)
class RandomIdealParams:
    nvars: int
    npolys: int
    max_terms: int
    max_degree: int
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.nvars <= 64:
            raise ValueError("nvars must be in [1, 64]")
        if self.npolys < 1:
            raise ValueError("npolys must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if not 1 <= self.max_degree <= self.nvars:
            raise ValueError("max_degree must be in [1, nvars]")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def random_ideal(params: RandomIdealParams) -> tuple[Ring, list[Polynomial]]:
    """Seeded random generators.

    Per polynomial: ``k = 1 + below(max_terms)`` (capped by the number of
    monomials of degree <= max_degree).  Monomials are drawn until ``k``
    distinct ones exist: degree ``d = below(max_degree + 1)``, then ``d``
    variables by partial Fisher-Yates over ``[1..n]``
    (swap position ``s`` with ``s + below(n - s)``).
    """
    n, D = params.nvars, params.max_degree
    ring = Ring(n)
    rng = SplitMix64(params.seed)
    available = sum(math.comb(n, d) for d in range(D + 1))
    polys = []
    for _ in range(params.npolys):
        k = min(1 + rng.below(params.max_terms), available)
        chosen: dict[int, None] = {}
        while len(chosen) < k:
            d = rng.below(D + 1)
            idx = list(range(1, n + 1))
            mask = 0
            for s in range(d):
                r = s + rng.below(n - s)
                idx[s], idx[r] = idx[r], idx[s]
                mask |= ring.bit(idx[s])
            chosen.setdefault(mask, None)
        polys.append(Polynomial(chosen))
    return ring, polys
