"""Degree regularization filters.

Two one-shot filters on the dot-product graph: the upper filter keeps
points whose degree (measured in the ORIGINAL set) is at most 11|E|/(5q),
the lower filter keeps points with degree at least |E|/(5q). Thresholds
are exact rationals compared against integer degrees, so membership is
decided exactly, never by floating point.

The size guarantees (at least half survives the upper filter, at least a
sixth the lower) are theorems only for sufficiently dense sets; here they
are recorded as booleans. The upper filter's report also carries the
maximum degree remeasured INSIDE the kept set together with the bound
22|E'|/(5q) it is supposed to obey, so both the defining threshold and the
remeasured reading are checkable side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dotgraph import DotGraph, build_graph


@dataclass(frozen=True)
class PruneReport:
    input_size: int
    output_size: int
    threshold: Fraction | None  # None for the composed filter (see stages)
    kept_indices: tuple
    direction: str  # "upper" | "lower" | "both"
    size_guarantee_met: bool
    internal_max_degree: int  # max degree remeasured inside the kept set
    internal_bound: Fraction | None = None  # 22|E'|/(5q), upper only
    internal_bound_holds: bool | None = None
    stages: tuple | None = None  # ("both" only) per-stage reports


def _internal_max(g: DotGraph, kept: list) -> int:
    mask = 0
    for i in kept:
        mask |= 1 << i
    return max(((g.rows[i] & mask).bit_count() for i in kept), default=0)


def prune_upper(g: DotGraph) -> PruneReport:
    """Keep u with deg_E(u) <= 11|E|/(5q); guarantee target |E'| >= |E|/2."""
    n = g.n
    q = g.set.ctx.q
    thr = Fraction(11 * n, 5 * q)
    kept = [i for i in range(n) if g.degrees[i] <= thr]
    internal = _internal_max(g, kept)
    bound = Fraction(22 * len(kept), 5 * q)
    return PruneReport(
        input_size=n,
        output_size=len(kept),
        threshold=thr,
        kept_indices=tuple(kept),
        direction="upper",
        size_guarantee_met=2 * len(kept) >= n,
        internal_max_degree=internal,
        internal_bound=bound,
        internal_bound_holds=internal <= bound,
    )


def prune_lower(g: DotGraph) -> PruneReport:
    """Keep u with deg_E(u) >= |E|/(5q); guarantee target |E0| >= |E|/6."""
    n = g.n
    q = g.set.ctx.q
    thr = Fraction(n, 5 * q)
    kept = [i for i in range(n) if g.degrees[i] >= thr]
    return PruneReport(
        input_size=n,
        output_size=len(kept),
        threshold=thr,
        kept_indices=tuple(kept),
        direction="lower",
        size_guarantee_met=6 * len(kept) >= n,
        internal_max_degree=_internal_max(g, kept),
    )


def prune_both(g: DotGraph) -> PruneReport:
    """Upper filter, rebuild the graph on the survivors, then lower filter.

    One pass each, in that order; the returned kept_indices refer to the
    original point set. Per-stage reports (with their own thresholds and
    index frames) ride along in stages.
    """
    up = prune_upper(g)
    if not up.kept_indices:
        return PruneReport(
            input_size=g.n,
            output_size=0,
            threshold=None,
            kept_indices=(),
            direction="both",
            size_guarantee_met=False,
            internal_max_degree=0,
            stages=(up, None),
        )
    sub = g.set.subset(up.kept_indices)
    g2 = build_graph(sub, g.t)
    low = prune_lower(g2)
    kept = tuple(up.kept_indices[i] for i in low.kept_indices)
    return PruneReport(
        input_size=g.n,
        output_size=len(kept),
        threshold=None,
        kept_indices=kept,
        direction="both",
        size_guarantee_met=up.size_guarantee_met and low.size_guarantee_met,
        internal_max_degree=_internal_max(g2, list(low.kept_indices)),
        stages=(up, low),
    )
