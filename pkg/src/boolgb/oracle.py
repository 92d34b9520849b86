"""Brute-force checks that share no code path with the Groebner engine.

* Variety enumeration over all of {0,1}^n (numpy-vectorized).
* Dense polynomials with exponents in {0, 1, 2}, so field polynomials
  ``x^2 + x`` can be written down literally.
* A plain backtracking Shidoku solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encoders import ShidokuPuzzle, shidoku_units
from .ring import Polynomial, Ring, eval_poly

VARIETY_CAP = 24
_CHUNK = 1 << 20


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class VarietyReport:
    nvars: int
    points: frozenset[int]

    def __len__(self) -> int:
        return len(self.points)

    def check(self, gens: list[Polynomial], limit: int = 4096) -> None:
        """Re-evaluate generators point by point (pure Python) on up to ``limit`` points."""
        for k, p in enumerate(sorted(self.points)):
            if k >= limit:
                break
            for g in gens:
                if eval_poly(g, p):
                    raise AssertionError(f"generator does not vanish at point {p:#b}")

    def as_bitstrings(self) -> list[str]:
        """Points as x1..xn bit strings, ascending."""
        return [format(p, f"0{self.nvars}b") for p in sorted(self.points)]


def _eval_many(f: Polynomial, pts: np.ndarray) -> np.ndarray:
    acc = np.zeros(pts.shape, dtype=bool)
    for t in f.terms:
        tt = np.uint64(t)
        acc ^= (pts & tt) == tt
    return acc


def enumerate_variety(gens: list[Polynomial], ring: Ring, cap: int = VARIETY_CAP) -> VarietyReport:
    """All points of {0,1}^n where every generator vanishes."""
    if ring.nvars > cap:
        raise CapExceeded(f"{ring.nvars} variables exceeds the enumeration cap of {cap}")
    total = 1 << ring.nvars
    found: list[int] = []
    for lo in range(0, total, _CHUNK):
        pts = np.arange(lo, min(total, lo + _CHUNK), dtype=np.uint64)
        alive = np.ones(pts.shape, dtype=bool)
        for g in gens:
            alive &= ~_eval_many(g, pts)
            if not alive.any():
                break
        found.extend(pts[alive].tolist())
    report = VarietyReport(ring.nvars, frozenset(found))
    report.check(gens)
    return report


def varieties_equal(A: list[Polynomial], B: list[Polynomial], ring: Ring, cap: int = VARIETY_CAP) -> bool:
    return enumerate_variety(A, ring, cap).points == enumerate_variety(B, ring, cap).points


# --- dense arithmetic ------------------------------------------------------

Exps = tuple[int, ...]


class DensePoly:
    """Polynomial over F2 in the covering ring F2[x1..xn], exponents at most 2.

    Terms are exponent vectors indexed x1..xn; tuple comparison is lex order.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=()):
        self.nvars = nvars
        acc: set[Exps] = set()
        for e in terms:
            e = tuple(e)
            if len(e) != nvars or any(x not in (0, 1, 2) for x in e):
                raise ValueError(f"bad exponent vector {e}")
            acc ^= {e}
        self.terms = frozenset(acc)

    @classmethod
    def from_boolean(cls, f: Polynomial, ring: Ring) -> DensePoly:
        n = ring.nvars
        return cls(n, (tuple((t >> (n - i)) & 1 for i in range(1, n + 1)) for t in f.terms))

    @classmethod
    def field_polynomial(cls, nvars: int, i: int) -> DensePoly:
        sq = [0] * nvars
        sq[i - 1] = 2
        lin = [0] * nvars
        lin[i - 1] = 1
        return cls(nvars, [sq, lin])

    def __add__(self, other: DensePoly) -> DensePoly:
        out = DensePoly(self.nvars)
        out.terms = self.terms ^ other.terms
        return out

    def mul_term(self, e: Exps) -> DensePoly:
        return DensePoly(self.nvars, (tuple(a + b for a, b in zip(t, e)) for t in self.terms))

    def __mul__(self, other: DensePoly) -> DensePoly:
        return DensePoly(
            self.nvars,
            (tuple(a + b for a, b in zip(s, t)) for s in self.terms for t in other.terms),
        )

    def leading(self) -> Exps:
        return max(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, DensePoly) and self.terms == other.terms

    def to_boolean(self, ring: Ring) -> Polynomial:
        """Apply x^2 -> x to every exponent and collect terms mod 2."""
        n = ring.nvars
        masks = []
        for e in self.terms:
            m = 0
            for i, x in enumerate(e, 1):
                if x:
                    m |= 1 << (n - i)
            masks.append(m)
        return Polynomial(masks)


def dense_s_polynomial(f: DensePoly, g: DensePoly) -> DensePoly:
    lf, lg = f.leading(), g.leading()
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    return f.mul_term(tuple(c - a for c, a in zip(lcm, lf))) + g.mul_term(tuple(c - b for c, b in zip(lcm, lg)))


def dense_field_s_polynomial(f: Polynomial, i: int, ring: Ring) -> Polynomial:
    """S(f, x_i^2 + x_i) computed in the covering ring, then mapped to the quotient."""
    if not f or not ring.bit(i) & f.lt:
        raise ValueError(f"x{i} must divide the leading term")
    s = dense_s_polynomial(DensePoly.from_boolean(f, ring), DensePoly.field_polynomial(ring.nvars, i))
    return s.to_boolean(ring)


def dense_mono_poly_mul(m: int, f: Polynomial, ring: Ring) -> Polynomial:
    mono = DensePoly.from_boolean(Polynomial.from_sorted((m,)), ring)
    return (mono * DensePoly.from_boolean(f, ring)).to_boolean(ring)


# --- Shidoku ---------------------------------------------------------------


def solve_shidoku_backtracking(puzzle: ShidokuPuzzle, limit: int | None = None) -> list[tuple[int, ...]]:
    """Every completion of the clues, cells filled row-major with values ascending."""
    units = shidoku_units()
    peers = [set() for _ in range(16)]
    for unit in units:
        ks = [(r - 1) * 4 + (c - 1) for r, c in unit]
        for a in ks:
            peers[a].update(k for k in ks if k != a)

    grid = list(puzzle.cells)
    for k, v in enumerate(grid):
        if v and any(grid[p] == v for p in peers[k]):
            return []

    solutions: list[tuple[int, ...]] = []

    def search(k: int) -> bool:
        if k == 16:
            solutions.append(tuple(grid))
            return limit is not None and len(solutions) >= limit
        if puzzle.cells[k]:
            return search(k + 1)
        for v in range(1, 5):
            if all(grid[p] != v for p in peers[k]):
                grid[k] = v
                if search(k + 1):
                    return True
                grid[k] = 0
        return False

    search(0)
    return solutions
