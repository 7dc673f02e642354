"""Shattering checks, brute-force VC dimension, constructive witness
searches, and the PAC sample-size bound formulas.

A set C of points is shattered when every labeling of C is realized by
some hypothesis h_y, y in E (h_y(x) = 1 iff x . y = t). A shattered pair
or triple can be certified by an explicit tuple of points: one label point
per subset of C placed on exactly the right planes, plus an off-every-plane
point for the all-zero labeling. The witness searches construct these
certificates in the order the density arguments suggest: grow a folded
pair of nondegenerate quintuples around a shared (hub, common, side) triple,
filter the seven-point conditions, then complete the single-label points
and the all-zero point by row scans. Every returned witness is re-verified
field by field before it leaves the search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from math import comb

import numpy as np

from .dotgraph import DotGraph, bits, lowest_bit
from .errors import BudgetExceededError, DuplicateIndicesError
from .gf import Point

DEFAULT_SEARCH_BUDGET = 1_000_000
DEFAULT_VC_BUDGET = 5_000_000


# -- shattering and VC dimension --------------------------------------------


def shatters(g: DotGraph, c_indices) -> bool:
    """True iff every subset S of C is the positive set of some hypothesis.

    For each S, the candidate hypotheses form the bitset AND of the rows of
    points in S and the complemented rows of the rest; C is shattered iff
    all 2^|C| of those masks are nonempty.
    """
    c = list(c_indices)
    if len(set(c)) != len(c):
        raise DuplicateIndicesError(f"repeated index in {c}")
    full = g.full_mask
    rows = [g.rows[i] for i in c]
    for pattern in range(1 << len(c)):
        mask = full
        for i, r in enumerate(rows):
            mask &= r if (pattern >> i) & 1 else ~r
            if not mask:
                break
        if not mask:
            return False
    return True


@dataclass(frozen=True)
class VcResult:
    dimension: int
    truncated: bool  # dimension == max_check: the true value may be larger


def vc_dimension(g: DotGraph, max_check: int, budget: int = DEFAULT_VC_BUDGET) -> VcResult:
    """Largest n <= max_check with some shattered n-subset, by level-wise
    exhaustive search.

    Refuses (BudgetExceededError) when the subset enumeration up to
    max_check would exceed the budget, rather than ever reporting a wrong
    or silently truncated dimension. Level j only extends shattered
    (j-1)-sets, which is exact: every subset of a shattered set is
    shattered, so levels with no survivors end the search.
    """
    if max_check < 0:
        raise ValueError("max_check must be >= 0")
    n = g.n
    total = sum(comb(n, j) for j in range(1, max_check + 1))
    if total > budget:
        raise BudgetExceededError(
            f"enumerating {total} subsets of size <= {max_check} exceeds budget {budget}"
        )
    best = 0
    prev = {()}
    for size in range(1, max_check + 1):
        cur = set()
        for base in prev:
            start = base[-1] + 1 if base else 0
            for ext in range(start, n):
                cand = base + (ext,)
                if size > 1 and any(
                    cand[:i] + cand[i + 1 :] not in prev for i in range(size - 1)
                ):
                    continue
                if shatters(g, cand):
                    cur.add(cand)
        if not cur:
            break
        best = size
        prev = cur
    return VcResult(best, best == max_check)


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class WitnessVC2:
    """Certificate that {x1, x2} is shattered: y12 labels both, y1 and y2
    label exactly one each, ystar labels neither."""

    x1: Point
    x2: Point
    y12: Point
    y1: Point
    y2: Point
    ystar: Point


@dataclass(frozen=True)
class WitnessVC3:
    """Certificate that {x1, x2, x3} is shattered: one label point per
    nonempty subset plus ystar for the empty labeling."""

    x1: Point
    x2: Point
    x3: Point
    y1: Point
    y2: Point
    y3: Point
    y12: Point
    y13: Point
    y23: Point
    y123: Point
    ystar: Point


def _vc2_conditions(w: WitnessVC2):
    return [
        ("x1 != x2", w.x1 != w.x2),
        ("x1.y12 = t", (w.x1, w.y12, True)),
        ("x2.y12 = t", (w.x2, w.y12, True)),
        ("x1.y1 = t", (w.x1, w.y1, True)),
        ("x2.y1 != t", (w.x2, w.y1, False)),
        ("x2.y2 = t", (w.x2, w.y2, True)),
        ("x1.y2 != t", (w.x1, w.y2, False)),
        ("x1.ystar != t", (w.x1, w.ystar, False)),
        ("x2.ystar != t", (w.x2, w.ystar, False)),
    ]


def _vc3_conditions(w: WitnessVC3):
    xs = {"x1": w.x1, "x2": w.x2, "x3": w.x3}
    labels = {
        "y123": ("x1", "x2", "x3"),
        "y12": ("x1", "x2"),
        "y13": ("x1", "x3"),
        "y23": ("x2", "x3"),
        "y1": ("x1",),
        "y2": ("x2",),
        "y3": ("x3",),
        "ystar": (),
    }
    out = [
        ("x1 != x2", w.x1 != w.x2),
        ("x1 != x3", w.x1 != w.x3),
        ("x2 != x3", w.x2 != w.x3),
    ]
    for yname, on in labels.items():
        y = getattr(w, yname)
        for xname, x in xs.items():
            if xname in on:
                out.append((f"{xname}.{yname} = t", (x, y, True)))
            else:
                out.append((f"{xname}.{yname} != t", (x, y, False)))
    return out


def witness_verify(w, g: DotGraph):
    """(ok, violations): checks membership in E and every dot condition by
    direct field arithmetic, independent of the adjacency bitsets."""
    ctx = g.set.ctx
    t = g.t
    violations = []
    for f in fields(w):
        pt = getattr(w, f.name)
        if pt not in g.set:
            violations.append(f"{f.name} in E")
    conds = _vc2_conditions(w) if isinstance(w, WitnessVC2) else _vc3_conditions(w)
    for name, spec in conds:
        if isinstance(spec, bool):
            ok = spec
        else:
            x, y, want = spec
            ok = (ctx.dot(x, y) == t) == want
        if not ok:
            violations.append(name)
    return not violations, violations


def _checked(w, g):
    ok, violations = witness_verify(w, g)
    if not ok:  # unreachable if the search is correct
        raise AssertionError(f"search produced an invalid witness: {violations}")
    return w


def find_vc2_witness(
    g: DotGraph,
    strategy: str = "exhaustive",
    seed: int = 0,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> WitnessVC2 | None:
    """Search for a shattering certificate of a pair.

    Candidates are (y12, x1, x2) with both x_i on y12's plane; y1, y2 and
    ystar are completed by row scans (lowest eligible index). Exhaustive
    runs in lexicographic candidate order; seeded-random samples starting
    edges uniformly. Both stop after `budget` candidate tuples. Absence is
    returned as None, never raised.
    """
    if strategy not in ("exhaustive", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rows = g.rows
    pts = g.set.points
    full = g.full_mask

    def complete(y12: int, x1: int, x2: int) -> WitnessVC2 | None:
        m1 = rows[x1] & ~rows[x2] & full
        if not m1:
            return None
        m2 = rows[x2] & ~rows[x1] & full
        if not m2:
            return None
        ms = ~rows[x1] & ~rows[x2] & full
        if not ms:
            return None
        return WitnessVC2(
            x1=pts[x1],
            x2=pts[x2],
            y12=pts[y12],
            y1=pts[lowest_bit(m1)],
            y2=pts[lowest_bit(m2)],
            ystar=pts[lowest_bit(ms)],
        )

    attempts = 0
    if strategy == "exhaustive":
        for y12 in range(g.n):
            nb = list(bits(rows[y12]))
            for x1 in nb:
                for x2 in nb:
                    if x1 == x2:
                        continue
                    attempts += 1
                    if attempts > budget:
                        return None
                    w = complete(y12, x1, x2)
                    if w is not None:
                        return _checked(w, g)
        return None

    edges = g.edge_list()
    if not edges:
        return None
    nbrs = g.neighbor_lists()
    rng = np.random.RandomState(_seed_pair(seed))
    while attempts < budget:
        attempts += 1
        y12, x1 = edges[int(rng.randint(0, len(edges)))]
        nb = nbrs[y12]
        if len(nb) < 2:
            continue
        x2 = nb[int(rng.randint(0, len(nb)))]
        if x2 == x1:
            continue
        w = complete(y12, x1, x2)
        if w is not None:
            return _checked(w, g)
    return None


def find_vc3_witness(
    g: DotGraph,
    strategy: str = "exhaustive",
    seed: int = 0,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> WitnessVC3 | None:
    """Search for a shattering certificate of a triple, in the folded order.

    A candidate is (hub, common, side, u, u2) where hub plays x2, common
    plays y123 (an edge away from the hub), side plays y13 (off the hub's
    plane), and u, u2 play x1, x3 drawn from the joint neighborhood of
    common and side: two nondegenerate quintuples glued along the shared
    triple. The double-label points y12, y23 are then any joint neighbors
    of the hub and one x_i avoiding the other (at most 3q^2 points of E sit
    on the three x_i planes, so completions exist in dense sets), and
    y1, y2, y3, ystar complete by row scans.
    """
    if strategy not in ("exhaustive", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rows = g.rows
    pts = g.set.points
    full = g.full_mask

    def complete(y: int, z: int, v: int, u: int, u2: int) -> WitnessVC3 | None:
        zbit = 1 << z
        ry, ru, ru2 = rows[y], rows[u], rows[u2]
        m12 = ry & ru & ~ru2 & ~zbit & full
        if not m12:
            return None
        m23 = ry & ru2 & ~ru & ~zbit & full
        if not m23:
            return None
        m1 = ru & ~ry & ~ru2 & full
        if not m1:
            return None
        m2 = ry & ~ru & ~ru2 & full
        if not m2:
            return None
        m3 = ru2 & ~ru & ~ry & full
        if not m3:
            return None
        ms = ~ru & ~ry & ~ru2 & full
        if not ms:
            return None
        return WitnessVC3(
            x1=pts[u],
            x2=pts[y],
            x3=pts[u2],
            y1=pts[lowest_bit(m1)],
            y2=pts[lowest_bit(m2)],
            y3=pts[lowest_bit(m3)],
            y12=pts[lowest_bit(m12)],
            y13=pts[v],
            y23=pts[lowest_bit(m23)],
            y123=pts[z],
            ystar=pts[lowest_bit(ms)],
        )

    attempts = 0
    if strategy == "exhaustive":
        for y in range(g.n):
            ry = rows[y]
            for z in bits(ry):
                base = rows[z] & ~(1 << y)
                if not base:
                    continue
                for v in range(g.n):
                    if (ry >> v) & 1:  # y13 must avoid the hub's plane
                        continue
                    um = base & rows[v]
                    if not um:
                        continue
                    us = list(bits(um))
                    for u in us:
                        for u2 in us:
                            if u == u2:
                                continue
                            attempts += 1
                            if attempts > budget:
                                return None
                            w = complete(y, z, v, u, u2)
                            if w is not None:
                                return _checked(w, g)
        return None

    edges = g.edge_list()
    if not edges:
        return None
    rng = np.random.RandomState(_seed_pair(seed))
    n = g.n
    while attempts < budget:
        attempts += 1
        y, z = edges[int(rng.randint(0, len(edges)))]
        ry = rows[y]
        v = int(rng.randint(0, n))
        if (ry >> v) & 1:
            continue
        um = rows[z] & ~(1 << y) & rows[v]
        if not um:
            continue
        us = list(bits(um))
        if len(us) < 2:
            continue
        u = us[int(rng.randint(0, len(us)))]
        u2 = us[int(rng.randint(0, len(us)))]
        if u == u2:
            continue
        w = complete(y, z, v, u, u2)
        if w is not None:
            return _checked(w, g)
    return None


def _seed_pair(seed: int):
    """RandomState takes 32-bit words; split larger seeds losslessly."""
    seed = int(seed)
    if 0 <= seed < 2**32:
        return seed
    return [seed & 0xFFFFFFFF, (seed >> 32) & 0xFFFFFFFF]


# -- PAC sample-size bounds --------------------------------------------------


@dataclass(frozen=True)
class PacParams:
    """Inputs to the sample-complexity bracket: VC dimension n, accuracy
    epsilon, confidence delta, and the two caller-supplied constants."""

    n: int
    epsilon: Fraction
    delta: Fraction
    c1: Fraction = Fraction(1)
    c2: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "delta", Fraction(self.delta))
        object.__setattr__(self, "c1", Fraction(self.c1))
        object.__setattr__(self, "c2", Fraction(self.c2))
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        if self.c1 <= 0 or self.c2 <= 0:
            raise ValueError("constants must be positive")


def pac_sample_bounds(params: PacParams, log_base: float | None = None):
    """(lower, upper) sample-size bracket for a class of VC dimension n:

        lower = c1 * (n + log(1/delta)) / epsilon
        upper = c2 * (n * log(1/epsilon) + log(1/delta)) / epsilon

    Logarithms default to natural log (log_base overrides). Each log is
    evaluated in IEEE double precision and embedded exactly in a Fraction;
    all other arithmetic is exact, so the results are exact rationals of
    the double-rounded logs.
    """

    def log(x: Fraction) -> Fraction:
        val = math.log(float(x)) if log_base is None else math.log(float(x), log_base)
        return Fraction(val)

    log_delta = log(1 / params.delta)
    log_eps = log(1 / params.epsilon)
    lower = params.c1 * (params.n + log_delta) / params.epsilon
    upper = params.c2 * (params.n * log_eps + log_delta) / params.epsilon
    return lower, upper
