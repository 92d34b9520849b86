"""Buchberger's algorithm in F2[x1..xn]/<xi^2 + xi> on bitmask polynomials.

The field polynomials ``xi^2 + xi`` are never stored.  Each basis element
``g`` instead spawns one field pair per variable of its leading term, whose
S-polynomial ``xi * tail(g) + lt(g)`` is again multilinear.  Field pairs
with ``xi`` not in ``lt(g)`` are never formed: their leading terms are
coprime, so the first criterion discards them.
"""

from __future__ import annotations

import heapq
import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from .ring import Polynomial, Ring

Terms = tuple[int, ...]


@dataclass(frozen=True)
class CriticalPair:
    """A basis pair ``(i, j)`` or a field pair ``(i, var_bit)``."""

    i: int
    j: int | None = None
    var_bit: int | None = None
    lcm_key: int = 0
    degree_key: int = 0

    @property
    def is_field(self) -> bool:
        return self.var_bit is not None

    @classmethod
    def basis(cls, i: int, j: int, lt_i: int, lt_j: int) -> CriticalPair:
        if i == j:
            raise ValueError("a basis pair needs two distinct elements")
        i, j = min(i, j), max(i, j)
        lcm = lt_i | lt_j
        return cls(i, j, None, lcm, lcm.bit_count())

    @classmethod
    def field(cls, i: int, var_bit: int, lt_i: int) -> CriticalPair:
        if not var_bit & lt_i:
            raise ValueError("field pair variable must divide the leading term")
        return cls(i, None, var_bit, lt_i, lt_i.bit_count() + 1)

    def sort_key(self) -> tuple[int, int]:
        # normal strategy: lowest degree, then lex-smallest lcm
        return (self.degree_key, self.lcm_key)


@dataclass
class GBStats:
    basis_pairs: int = 0
    field_pairs: int = 0
    criterion1_skips: int = 0
    chain_skips: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    max_basis: int = 0
    wall_time: float = 0.0


@dataclass
class GroebnerBasis:
    ring: Ring
    elements: list[Polynomial]
    stats: GBStats = field(default_factory=GBStats, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_one()


# --- term-level kernels ----------------------------------------------------


def _mul_terms(m: int, terms: Terms) -> set[int]:
    out: set[int] = set()
    for t in terms:
        t |= m
        if t in out:
            out.remove(t)
        else:
            out.add(t)
    return out


def _spoly_terms(f: Terms, g: Terms) -> set[int]:
    lcm = f[0] | g[0]
    a = _mul_terms(lcm ^ f[0], f[1:])
    a ^= _mul_terms(lcm ^ g[0], g[1:])
    return a


def _field_spoly_terms(g: Terms, bit: int) -> set[int]:
    s = _mul_terms(bit, g[1:])
    s ^= {g[0]}
    return s


def _reduce(work: set[int], lts: list[int], tails: list[Terms]) -> Terms:
    """Full normal form of the term set ``work`` (consumed) modulo the given reducers.

    Terms are processed from the lex-greatest down; rewriting ``t`` by a reducer
    only introduces terms smaller than ``t``, so each term is visited once.
    """
    if not work:
        return ()
    if not lts:
        return tuple(sorted(work, reverse=True))
    heap = [-t for t in work]
    heapq.heapify(heap)
    out = []
    pop = heapq.heappop
    push = heapq.heappush
    while work:
        t = -pop(heap)
        if t not in work:
            continue
        work.discard(t)
        k = -1
        for idx, d in enumerate(lts):
            if d & t == d:
                k = idx
                break
        if k < 0:
            out.append(t)
            continue
        u = t ^ lts[k]
        for s in tails[k]:
            s |= u
            if s in work:
                work.remove(s)
            else:
                work.add(s)
                push(heap, -s)
    return tuple(out)


def _reduce_indexed(
    work: set[int],
    buckets: dict[int, list[tuple[int, Terms]]],
    memo: dict[int, tuple[int, Terms] | None],
) -> Terms:
    """Like :func:`_reduce`, but reducers are looked up by the lowest set bit of their lt.

    A reducer ``d`` of ``t`` has all its bits in ``t``, so only the buckets of
    the bits of ``t`` need scanning.  Among matches the shortest tail wins.
    ``memo`` caches lookups and must be cleared whenever ``buckets`` changes.
    A zero lt (the unit) is not supported.
    """
    if not work:
        return ()
    heap = [-t for t in work]
    heapq.heapify(heap)
    out = []
    pop = heapq.heappop
    push = heapq.heappush
    get = buckets.get
    while work:
        t = -pop(heap)
        if t not in work:
            continue
        work.discard(t)
        if t in memo:
            hit = memo[t]
        else:
            hit = None
            best = 0
            b = t
            while b:
                low = b & -b
                b ^= low
                cands = get(low)
                if cands:
                    # buckets are sorted by tail length
                    for d, tail in cands:
                        if d & t == d:
                            if hit is None or len(tail) < best:
                                hit = d, tail
                                best = len(tail)
                            break
            memo[t] = hit
        if hit is None:
            out.append(t)
            continue
        d, tail = hit
        u = t ^ d
        for s in tail:
            s |= u
            if s in work:
                work.remove(s)
            else:
                work.add(s)
                push(heap, -s)
    return tuple(out)


def _bucket_index(polys) -> dict[int, list[tuple[int, Terms]]]:
    buckets: dict[int, list[tuple[int, Terms]]] = {}
    for g in sorted(polys, key=len):
        d = g[0]
        buckets.setdefault(d & -d, []).append((d, tuple(g[1:])))
    return buckets


def _wrap(terms: Terms) -> Polynomial:
    return Polynomial.from_sorted(terms)


# --- public operations -----------------------------------------------------


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two nonzero Boolean polynomials."""
    if not f or not g:
        raise ValueError("s_polynomial needs nonzero inputs")
    return Polynomial(_spoly_terms(f.terms, g.terms))


def field_s_polynomial(g: Polynomial, i: int, ring: Ring) -> Polynomial:
    """Image of ``S(g, x_i^2 + x_i)`` in the quotient ring: ``x_i * tail(g) + lt(g)``."""
    if not g:
        raise ValueError("field_s_polynomial needs a nonzero polynomial")
    bit = ring.bit(i)
    if not bit & g.lt:
        raise ValueError(f"x{i} does not divide the leading term")
    return Polynomial(_field_spoly_terms(g.terms, bit))


def normal_form(f: Polynomial, G: list[Polynomial]) -> Polynomial:
    """Remainder of full division of ``f`` by ``G`` (first matching reducer wins)."""
    reducers = [g for g in G if g]
    if any(g.is_one() for g in reducers):
        return Polynomial.zero()
    lts = [g.terms[0] for g in reducers]
    tails = [g.terms[1:] for g in reducers]
    return _wrap(_reduce(set(f.terms), lts, tails))


def criterion1_applies(lt_i: int, lt_j: int) -> bool:
    """First criterion: coprime leading terms, the pair reduces to zero."""
    return lt_i & lt_j == 0


def chain_criterion_applies(pair: CriticalPair, pending: set[tuple[int, int]], lts: list[int]) -> bool:
    """Second criterion for a basis pair.

    ``pending`` holds the basis pairs not yet processed or eliminated,
    as ``(min, max)`` index tuples; ``lts`` lists every basis leading term.
    """
    if pair.is_field:
        return False
    i, j, lcm = pair.i, pair.j, pair.lcm_key
    for k, d in enumerate(lts):
        if k == i or k == j or d & lcm != d:
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def interreduce(G: list[Polynomial]) -> list[Polynomial]:
    """Mutually reduce ``G`` until stable; returns elements sorted by descending lt."""
    cur = [g for g in dict.fromkeys(G) if g]
    changed = True
    while changed:
        changed = False
        idx = 0
        while idx < len(cur):
            others = cur[:idx] + cur[idx + 1:]
            h = normal_form(cur[idx], others)
            if h != cur[idx]:
                changed = True
                if h.is_one():
                    return [Polynomial.one()]
                if h and h not in others:
                    cur[idx] = h
                    idx += 1
                else:
                    del cur[idx]
            else:
                idx += 1
    return sorted(cur, key=lambda g: g.terms[0], reverse=True)


class _Builder:
    def __init__(self, criterion1: bool, chain: bool):
        self.criterion1 = criterion1
        self.chain = chain
        self.polys: list[Terms] = []
        self.lts: list[int] = []
        self.lt_arr = np.zeros(64, dtype=np.uint64)
        self.active: list[int] = []  # indices whose lt is minimal; used as reducers
        self.buckets: dict[int, list[tuple[int, Terms]]] = {}
        self.memo: dict[int, tuple[int, Terms] | None] = {}
        self.pending: set[tuple[int, int]] = set()
        self.queue: list = []
        self.seq = itertools.count()
        self.stats = GBStats()

    def reduce(self, work: set[int]) -> Terms:
        return _reduce_indexed(work, self.buckets, self.memo)

    def push(self, pair: CriticalPair):
        heapq.heappush(self.queue, (pair.degree_key, pair.lcm_key, next(self.seq), pair))

    def add(self, h: Terms):
        idx = len(self.polys)
        lt = h[0]
        self.polys.append(h)
        self.lts.append(lt)
        if idx == len(self.lt_arr):
            self.lt_arr = np.concatenate([self.lt_arr, np.zeros_like(self.lt_arr)])
        self.lt_arr[idx] = lt

        # elements whose lt is a multiple of the new lt stop acting as reducers
        keep = [k for k in self.active if lt & self.lts[k] != lt]
        keep.append(idx)
        self.active = keep
        self.buckets = _bucket_index([self.polys[k] for k in keep])
        self.memo = {}
        self.stats.max_basis = max(self.stats.max_basis, len(keep))

        b = lt
        while b:
            bit = b & -b
            b ^= bit
            self.stats.field_pairs += 1
            self.push(CriticalPair.field(idx, bit, lt))

        for k in range(idx):
            self.stats.basis_pairs += 1
            if self.criterion1 and criterion1_applies(self.lts[k], lt):
                self.stats.criterion1_skips += 1
                continue
            pair = CriticalPair.basis(k, idx, self.lts[k], lt)
            self.pending.add((k, idx))
            self.push(pair)

    def chain_applies(self, pair: CriticalPair) -> bool:
        # same test as chain_criterion_applies, with the divisor scan vectorized
        n = len(self.lts)
        arr = self.lt_arr[:n]
        i, j = pair.i, pair.j
        pending = self.pending
        for k in np.flatnonzero((arr & np.uint64(pair.lcm_key)) == arr).tolist():
            if k == i or k == j:
                continue
            if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
                continue
            return True
        return False

    def run(self) -> bool:
        """Drain the pair queue; returns True when the ideal turns out to be the unit ideal."""
        while self.queue:
            pair = heapq.heappop(self.queue)[-1]
            if pair.is_field:
                work = _field_spoly_terms(self.polys[pair.i], pair.var_bit)
            else:
                self.pending.discard((pair.i, pair.j))
                if self.chain and self.chain_applies(pair):
                    self.stats.chain_skips += 1
                    continue
                work = _spoly_terms(self.polys[pair.i], self.polys[pair.j])
            self.stats.reductions += 1
            h = self.reduce(work)
            if not h:
                self.stats.zero_reductions += 1
            elif h == (0,):
                return True
            else:
                self.add(h)
        return False

    def reduced_basis(self) -> list[Terms]:
        # active leading terms are pairwise non-dividing, so one pass of tail
        # reduction against the others yields the reduced basis
        out = []
        for k in self.active:
            g = self.polys[k]
            # the tail of g holds no multiple of lt(g), so g never picks itself
            out.append((g[0],) + self.reduce(set(g[1:])))
        out.sort(reverse=True)
        return out


def buchberger_gb(
    generators: list[Polynomial],
    ring: Ring,
    *,
    criterion1: bool = True,
    chain: bool = True,
) -> GroebnerBasis:
    """Reduced lex Groebner basis of the ideal generated by ``generators`` in the Boolean ring.

    ``criterion1`` and ``chain`` toggle the two pair-pruning criteria; the
    result does not depend on them.
    """
    start = time.perf_counter()
    b = _Builder(criterion1, chain)
    unit = False
    for f in generators:
        if not f:
            continue
        if f.terms[0] & ~ring.full_mask:
            raise ValueError("generator uses bits outside the ring")
        b.stats.reductions += 1
        h = b.reduce(set(f.terms))
        if not h:
            b.stats.zero_reductions += 1
            continue
        if h == (0,):
            unit = True
            break
        b.add(h)
    if not unit:
        unit = b.run()
    if unit:
        elements = [Polynomial.one()]
    else:
        elements = [_wrap(t) for t in b.reduced_basis()]
    b.stats.wall_time = time.perf_counter() - start
    return GroebnerBasis(ring, elements, b.stats)


def is_groebner_basis(G: list[Polynomial], ring: Ring) -> bool:
    """Check closure under every basis and field S-pair, with no pruning."""
    G = [g for g in G if g]
    if any(g.is_one() for g in G):
        return True
    buckets = _bucket_index([g.terms for g in G])
    memo: dict = {}
    for a in range(len(G)):
        g = G[a].terms
        b = g[0]
        while b:
            bit = b & -b
            b ^= bit
            if _reduce_indexed(_field_spoly_terms(g, bit), buckets, memo):
                return False
        for c in range(a + 1, len(G)):
            if _reduce_indexed(_spoly_terms(g, G[c].terms), buckets, memo):
                return False
    return True


def is_reduced(G: list[Polynomial]) -> bool:
    """No term of any element is divisible by another element's leading term."""
    lts = [g.lt for g in G]
    for a, g in enumerate(G):
        for c, d in enumerate(lts):
            if a != c and any(d & t == d for t in g.terms):
                return False
    return True


def lex_basis_points(G: list[Polynomial], ring: Ring) -> list[int]:
    """Zeros of a reduced lex basis by back-substitution from x_n up to x_1.

    The elements free of x_1..x_{k-1} form a basis of the elimination ideal,
    and with the field relations every partial zero extends, so the search
    never backtracks out of a dead end.  Returns points in ascending order.
    """
    if any(g.is_one() for g in G):
        return []
    n = ring.nvars
    # group elements by their highest variable (x1 is index 1)
    by_level: dict[int, list[Polynomial]] = {}
    for g in G:
        if g:
            top = n - (g.terms[0].bit_length() - 1)
            by_level.setdefault(top, []).append(g)
    points: list[int] = []

    def extend(k: int, p: int):
        if k == 0:
            points.append(p)
            return
        bit = 1 << (n - k)
        for v in (0, bit):
            q = p | v
            if all(not _eval_terms(g.terms, q) for g in by_level.get(k, ())):
                extend(k - 1, q)

    extend(n, 0)
    return sorted(points)


def _eval_terms(terms: Terms, p: int) -> int:
    v = 0
    for t in terms:
        if t & p == t:
            v ^= 1
    return v
