"""The relation D_t(u,v) = [u . v = t] on a point set E, as adjacency
bitsets, with exact counts of every configuration the degree and shattering
arguments consume.

Counting conventions: all tuples are ORDERED, the diagonal and self-loops
are included, and no distinctness is imposed except in the nondegenerate
quintuple family (which excludes y.v = t, x = z, y = u). Counts are plain
Python ints, so they never overflow (|E|^5 leaves 64 bits around |E| ~ 7000).

Every fast kernel (bitset AND / popcount passes, walk-vector sums) has a
naive nested-loop twin reachable with naive=True. The naive path rebuilds
the relation from scalar dot products and enumerates tuples one by one; it
is the permanent trust anchor for the fast path and is feasible up to a few
dozen points.

Predicted count bands are recorded as exact rationals next to each count,
with an in_band boolean. They are predictions for dense sets, never
assertions: sparse or tiny E can legitimately fall outside every band
except the edge band, which holds unconditionally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .geometry import PointSet, check_t
from .gf import TABLE_LIMIT


def bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class DotGraph:
    """Immutable adjacency view of D_t on an indexed point set.

    rows[i] is a bitset over point indices: bit j is set iff p_i . p_j = t.
    The relation is symmetric and loops (p_i . p_i = t) are kept.
    """

    def __init__(self, pset: PointSet, t: int, rows: list):
        self.set = pset
        self.t = t
        self.rows = rows
        self.n = len(pset)
        self.full_mask = (1 << self.n) - 1
        self.degrees = [r.bit_count() for r in rows]
        self._nbrs = None
        self._edge_list = None
        self._pair_stats = None

    def neighbor_lists(self) -> list:
        if self._nbrs is None:
            self._nbrs = [list(bits(r)) for r in self.rows]
        return self._nbrs

    def edge_list(self) -> list:
        """All ordered pairs (i, j) with D_t = 1, lexicographic."""
        if self._edge_list is None:
            self._edge_list = [(i, j) for i in range(self.n) for j in bits(self.rows[i])]
        return self._edge_list


def _pack_rows(bitmat: np.ndarray) -> list:
    packed = np.packbits(bitmat, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def build_graph(pset: PointSet, t: int) -> DotGraph:
    """Materialize D_t with |E|^2 dot products (vectorized when tables fit)."""
    check_t(t, pset.ctx)
    n = len(pset)
    if n < 1:
        raise ValueError("point set must be nonempty")
    ctx = pset.ctx
    if ctx.q > TABLE_LIMIT:
        rows = []
        for i in range(n):
            r = 0
            for j in range(n):
                if ctx.dot(pset[i], pset[j]) == t:
                    r |= 1 << j
            rows.append(r)
        return DotGraph(pset, t, rows)

    coords = pset.coord_array()
    rows = []
    if ctx.k == 1:
        ct = coords.T
        block = max(1, 8_000_000 // n)
        for s in range(0, n, block):
            m = (coords[s : s + block] @ ct) % ctx.p
            rows.extend(_pack_rows(m == t))
    else:
        block = max(1, 4_000_000 // (n * ctx.k))
        for s in range(0, n, block):
            b = coords[s : s + block]
            acc = np.zeros((b.shape[0], n, ctx.k), dtype=np.int64)
            for i in range(pset.d):
                prod = ctx.vec_mul(b[:, i : i + 1], coords[:, i][None, :])
                acc += ctx.np_digits[prod]
            enc = (acc % ctx.p) @ ctx.np_powers
            rows.extend(_pack_rows(enc == t))
    return DotGraph(pset, t, rows)


# -- naive oracle side ------------------------------------------------------
#
# Rebuilds the relation from scalar dot products (independent of the bitset
# build) and walks tuples with literal nested loops.


def _naive_relation(pset: PointSet, t: int):
    n = len(pset)
    ctx = pset.ctx
    rel = [[ctx.dot(pset[i], pset[j]) == t for j in range(n)] for i in range(n)]
    nbrs = [[j for j in range(n) if rel[i][j]] for i in range(n)]
    return rel, nbrs


def _edge_naive(pset, t) -> int:
    rel, _ = _naive_relation(pset, t)
    return sum(1 for row in rel for hit in row if hit)


def _p5_naive(pset, t) -> int:
    _, nbrs = _naive_relation(pset, t)
    total = 0
    for x1 in range(len(pset)):
        for _y1 in nbrs[x1]:
            for y12 in nbrs[x1]:
                for x2 in nbrs[y12]:
                    for _y2 in nbrs[x2]:
                        total += 1
    return total


def _c4_naive(pset, t) -> int:
    rel, nbrs = _naive_relation(pset, t)
    total = 0
    for x1 in range(len(pset)):
        for y12 in nbrs[x1]:
            for x2 in nbrs[y12]:
                for y2 in nbrs[x2]:
                    if rel[y2][x1]:
                        total += 1
    return total


def _a_tuples_naive(pset, t):
    """Yield every (x, y, z, u, v) with x.y = y.z = z.u = u.x = v.u = t."""
    rel, nbrs = _naive_relation(pset, t)
    for x in range(len(pset)):
        for y in nbrs[x]:
            for z in nbrs[y]:
                for u in nbrs[z]:
                    if rel[u][x]:
                        for v in nbrs[u]:
                            yield rel, x, y, z, u, v


def _a_naive(pset, t) -> int:
    return sum(1 for _ in _a_tuples_naive(pset, t))


def _a_degenerate_naive(pset, t) -> int:
    total = 0
    for rel, x, y, z, u, v in _a_tuples_naive(pset, t):
        if rel[y][v] or x == z or y == u:
            total += 1
    return total


def _triple_map_naive(pset, t) -> dict:
    out = {}
    for rel, x, y, z, u, v in _a_tuples_naive(pset, t):
        if rel[y][v] or x == z or y == u:
            continue
        key = (y, z, v)
        out[key] = out.get(key, 0) + 1
    return out


# -- fast kernels -----------------------------------------------------------


def edge_count(g: DotGraph, naive: bool = False) -> int:
    """sum_{u,v in E} D_t(u,v) over ordered pairs, diagonal included."""
    if naive:
        return _edge_naive(g.set, g.t)
    return sum(g.degrees)


def count_p5(g: DotGraph, naive: bool = False) -> int:
    """Ordered 5-tuples (x1,x2,y12,y1,y2) forming a 4-edge walk
    y1-x1-y12-x2-y2; computed as deg . (A^2 deg) via neighbor sums."""
    if naive:
        return _p5_naive(g.set, g.t)
    nbrs = g.neighbor_lists()
    s1 = g.degrees
    s2 = [sum(s1[j] for j in nb) for nb in nbrs]
    s3 = [sum(s2[j] for j in nb) for nb in nbrs]
    return sum(d * w for d, w in zip(s1, s3))


def _pair_stats(g: DotGraph):
    """One O(n^2) pass: (sum codeg^2, sum codeg^3, sum codeg*wcodeg) over
    ordered pairs, where wcodeg weights common neighbors by their degree."""
    if g._pair_stats is not None:
        return g._pair_stats
    rows = g.rows
    n = g.n
    deg_masks = {}
    for i, d in enumerate(g.degrees):
        if d:
            deg_masks[d] = deg_masks.get(d, 0) | (1 << i)
    masks = list(deg_masks.items())
    sum_cd2 = 0
    sum_cd3 = 0
    sum_cdw = 0
    for i in range(n):
        ri = rows[i]
        for j in range(i, n):
            inter = ri & rows[j]
            cd = inter.bit_count()
            if not cd:
                continue
            w = sum(d * (inter & m).bit_count() for d, m in masks)
            mult = 1 if i == j else 2
            sum_cd2 += mult * cd * cd
            sum_cd3 += mult * cd * cd * cd
            sum_cdw += mult * cd * w
    g._pair_stats = (sum_cd2, sum_cd3, sum_cdw)
    return g._pair_stats


def count_c4(g: DotGraph, naive: bool = False) -> int:
    """Ordered 4-cycles x1-y12-x2-y2-x1; equals sum over ordered pairs of
    codeg^2 (codeg = popcount of the row AND)."""
    if naive:
        return _c4_naive(g.set, g.t)
    return _pair_stats(g)[0]


def count_a(g: DotGraph, naive: bool = False) -> int:
    """Quintuples (x,y,z,u,v): a 4-cycle x-y-z-u plus any neighbor v of u;
    equals sum over ordered (x,z) of codeg * degree-weighted codeg."""
    if naive:
        return _a_naive(g.set, g.t)
    return _pair_stats(g)[2]


def count_a_degenerate(g: DotGraph, naive: bool = False) -> int:
    """Members of the quintuple family with y.v = t, or x = z, or y = u.

    Inclusion-exclusion collapses to three terms because y = u forces
    y.v = v.u = t: |{y.v=t}| + |{x=z}| - |{y.v=t and x=z}|, i.e.
    sum codeg(y,u)^3 + sum_x deg(x) * sum_{u in N(x)} deg(u) - sum codeg^2.
    """
    if naive:
        return _a_degenerate_naive(g.set, g.t)
    sum_cd2, sum_cd3, _ = _pair_stats(g)
    nbrs = g.neighbor_lists()
    t2 = sum(
        g.degrees[x] * sum(g.degrees[u] for u in nbrs[x]) for x in range(g.n)
    )
    return sum_cd3 + t2 - sum_cd2


def triple_count_map(g: DotGraph, naive: bool = False) -> dict:
    """f(y,z,v) = number of (x,u) completing a nondegenerate quintuple;
    keys are index triples with f > 0. sum f = |A'|; sum f^2 is the paired
    count the Cauchy-Schwarz folding step consumes."""
    if naive:
        return _triple_map_naive(g.set, g.t)
    rows = g.rows
    n = g.n
    out = {}
    for y in range(n):
        ry = rows[y]
        for z in bits(ry):
            u_mask = rows[z] & ~(1 << y)  # u in N(z), u != y
            if not u_mask:
                continue
            # x ranges over N(y) & N(u) minus z; z always lies in that
            # intersection here, so the count is codeg(y,u) - 1
            buckets = {}
            m = u_mask
            while m:
                lsb = m & -m
                u = lsb.bit_length() - 1
                m ^= lsb
                c = (ry & rows[u]).bit_count() - 1
                if c:
                    buckets[c] = buckets.get(c, 0) | lsb
            if not buckets:
                continue
            items = list(buckets.items())
            for v in range(n):
                if (ry >> v) & 1:  # y.v must not be t
                    continue
                rv = rows[v]
                f = 0
                for c, mask in items:
                    f += c * (mask & rv).bit_count()
                if f:
                    out[(y, z, v)] = f
    return out


# -- predicted bands --------------------------------------------------------


@dataclass(frozen=True)
class Band:
    lower: Fraction
    upper: Fraction
    in_band: bool


def _band(lower: Fraction, upper: Fraction, count: int) -> Band:
    return Band(lower, upper, lower <= count <= upper)


def _inv_sqrt_upper(q: int) -> Fraction:
    """Rational upper bound on q^(-1/2), tight to ~1e-6."""
    return Fraction(10**6, isqrt(q * 10**12))


# rational upper bound on 4/log(2) = 5.7707801..., used in the walk band
_FOUR_OVER_LOG2 = Fraction(5_770_781, 1_000_000)


def edge_band(g: DotGraph, count: int) -> Band:
    n, q = g.n, g.set.ctx.q
    center = Fraction(n * n, q)
    return _band(center - n * q, center + n * q, count)


def p5_band(g: DotGraph, count: int) -> Band:
    """Center |E|^5/q^4 with radius (4/log 2) q^2 |E|^4/q^4; for dense sets
    the radius is at most half the center, recovering the 1/2 .. 3/2 form."""
    n, q = g.n, g.set.ctx.q
    center = Fraction(n**5, q**4)
    radius = _FOUR_OVER_LOG2 * q**2 * Fraction(n**4, q**4)
    return _band(max(Fraction(0), center - radius), center + radius, count)


def c4_band(g: DotGraph, count: int) -> Band:
    n, q = g.n, g.set.ctx.q
    center = Fraction(n**4, q**4)
    err = 12 * _inv_sqrt_upper(q) + Fraction(8 * q**5, n**2) + Fraction(28 * q**2, n)
    lower = max(Fraction(0), center * (1 - err))
    return _band(lower, center * (1 + err), count)


def a_band(g: DotGraph, count: int) -> Band:
    n, q = g.n, g.set.ctx.q
    base = Fraction(n**5, q**5)
    return _band(base / 2, base * 2, count)


def a_degenerate_band(g: DotGraph, count: int) -> Band:
    n, q = g.n, g.set.ctx.q
    return _band(Fraction(0), Fraction(5 * n**2 * q**3), count)


def a_prime_band(g: DotGraph, count: int) -> Band:
    n, q = g.n, g.set.ctx.q
    base = Fraction(n**5, q**5)
    return _band(base / 4, base * 2, count)


@dataclass(frozen=True)
class CountReport:
    """Exact configuration counts with the predicted bands alongside."""

    edge_count: int
    p5_count: int
    c4_count: int
    a_count: int
    a_degenerate_count: int
    a_prime_count: int
    bands: dict
    f_sum: int | None = None
    f_sum_sq: int | None = None
    f_support: int | None = None


def count_report(
    g: DotGraph, naive: bool = False, include_triples: bool = True
) -> CountReport:
    ec = edge_count(g, naive=naive)
    p5 = count_p5(g, naive=naive)
    c4 = count_c4(g, naive=naive)
    a = count_a(g, naive=naive)
    a_deg = count_a_degenerate(g, naive=naive)
    a_prime = a - a_deg
    bands = {
        "edges": edge_band(g, ec),
        "p5": p5_band(g, p5),
        "c4": c4_band(g, c4),
        "a": a_band(g, a),
        "a_degenerate": a_degenerate_band(g, a_deg),
        "a_prime": a_prime_band(g, a_prime),
    }
    f_sum = f_sum_sq = f_support = None
    if include_triples:
        fmap = triple_count_map(g, naive=naive)
        f_sum = sum(fmap.values())
        f_sum_sq = sum(f * f for f in fmap.values())
        f_support = len(fmap)
    return CountReport(ec, p5, c4, a, a_deg, a_prime, bands, f_sum, f_sum_sq, f_support)
