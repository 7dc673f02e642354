"""Degree filters: membership must match the threshold predicates exactly,
with degrees recomputed from scratch for the check."""

from fractions import Fraction

import pytest

from dotvc.dotgraph import build_graph
from dotvc.experiments import random_subset
from dotvc.geometry import PointSet
from dotvc.gf import Field
from dotvc.prune import prune_both, prune_lower, prune_upper


def independent_degrees(ps, t):
    """Degrees via direct dot products, bypassing the graph build."""
    ctx = ps.ctx
    return [
        sum(1 for v in ps if ctx.dot(u, v) == t)
        for u in ps
    ]


def test_upper_full_space_examples():
    for q, thr in ((5, Fraction(11 * 125, 25)), (3, Fraction(11 * 27, 15))):
        ctx = Field(q)
        g = build_graph(PointSet.full_space(ctx, 3), 1)
        rep = prune_upper(g)
        assert rep.threshold == thr
        assert rep.output_size == q**3  # all degrees <= q^2 < threshold
        assert rep.kept_indices == tuple(range(q**3))
        assert rep.size_guarantee_met
        assert rep.internal_bound_holds


def test_lower_full_space_drops_only_zero():
    ctx = Field(5)
    ps = PointSet.full_space(ctx, 3)
    g = build_graph(ps, 1)
    rep = prune_lower(g)
    assert rep.threshold == Fraction(125, 25)
    assert rep.output_size == 124
    dropped = set(range(125)) - set(rep.kept_indices)
    assert dropped == {ps.index_of((0, 0, 0))}
    assert rep.size_guarantee_met


def test_zero_vector_alone():
    ctx = Field(5)
    ps = PointSet.from_points(ctx, 3, [(0, 0, 0)])
    g = build_graph(ps, 1)
    assert prune_upper(g).output_size == 1  # degree 0 <= threshold
    low = prune_lower(g)
    assert low.output_size == 0  # threshold 1/25 > 0
    assert not low.size_guarantee_met
    both = prune_both(g)
    assert both.output_size == 0
    assert both.kept_indices == ()


def test_both_full_space_two_stages():
    ctx = Field(5)
    ps = PointSet.full_space(ctx, 3)
    g = build_graph(ps, 1)
    rep = prune_both(g)
    assert rep.direction == "both"
    assert rep.output_size == 124
    up, low = rep.stages
    assert (up.output_size, low.output_size) == (125, 124)
    assert low.threshold == Fraction(125, 25)  # measured in the rebuilt set
    zero = ps.index_of((0, 0, 0))
    assert zero not in rep.kept_indices


@pytest.mark.parametrize("seed", range(10))
def test_membership_matches_predicate_exactly(seed):
    q = (3, 5, 7)[seed % 3]
    ctx = Field(q)
    ps = random_subset(ctx, 3, min(q**3, 15 + 13 * seed), seed=seed)
    g = build_graph(ps, 1)
    degs = independent_degrees(ps, 1)
    n = len(ps)
    up = prune_upper(g)
    assert set(up.kept_indices) == {
        i for i in range(n) if Fraction(degs[i]) <= Fraction(11 * n, 5 * q)
    }
    low = prune_lower(g)
    assert set(low.kept_indices) == {
        i for i in range(n) if Fraction(degs[i]) >= Fraction(n, 5 * q)
    }


def test_upper_idempotent_on_unchanged_set():
    ctx = Field(5)
    g = build_graph(PointSet.full_space(ctx, 3), 1)
    first = prune_upper(g)
    assert first.output_size == g.n  # unchanged
    again = prune_upper(g)
    assert again.kept_indices == first.kept_indices


def test_both_is_deterministic_re_execution():
    ctx = Field(5)
    ps = random_subset(ctx, 3, 100, seed=7)
    r1 = prune_both(build_graph(ps, 1))
    r2 = prune_both(build_graph(ps, 1))
    assert r1.kept_indices == r2.kept_indices
    assert r1.output_size == r2.output_size


def test_both_stage_two_predicate_in_rebuilt_frame():
    ctx = Field(7)
    ps = random_subset(ctx, 3, 120, seed=3)
    g = build_graph(ps, 1)
    rep = prune_both(g)
    up, low = rep.stages
    sub = ps.subset(up.kept_indices)
    degs = independent_degrees(sub, 1)
    m = len(sub)
    assert set(low.kept_indices) == {
        i for i in range(m) if Fraction(degs[i]) >= Fraction(m, 5 * 7)
    }
    assert rep.kept_indices == tuple(up.kept_indices[i] for i in low.kept_indices)


def test_thresholds_are_exact_rationals():
    ctx = Field(3)
    g = build_graph(PointSet.full_space(ctx, 3), 1)
    assert prune_upper(g).threshold == Fraction(297, 15)  # 11*27/(5*3), uncancelled
    assert prune_lower(g).threshold == Fraction(27, 15)
