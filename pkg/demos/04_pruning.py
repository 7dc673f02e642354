#!/usr/bin/env python3
"""Degree regularization before the witness searches.

Two one-shot filters: drop points whose dot-product degree exceeds
11|E|/(5q) (upper), then - after rebuilding the graph on the survivors -
drop points below |E'|/(5q) (lower). Thresholds are exact rationals; the
size guarantees (half survives, a sixth survives) are recorded booleans
since they are theorems only for dense sets.
"""

from dotvc import Field, PointSet, build_graph, prune_both, prune_upper, random_subset

ctx = Field(5)

print("== full space F_5^3 ==")
g = build_graph(PointSet.full_space(ctx, 3), 1)
up = prune_upper(g)
print(f"upper: threshold {up.threshold} keeps {up.output_size}/{up.input_size} "
      f"(every degree is q^2 = 25)")
both = prune_both(g)
stage_up, stage_low = both.stages
print(f"both:  upper {stage_up.output_size}, then lower with threshold "
      f"{stage_low.threshold} keeps {both.output_size}")
print("       the only casualty is the zero vector (degree 0)")

print("\n== sparse random set: the lower filter starts to bite ==")
ps = random_subset(ctx, 3, 40, seed=2)
g = build_graph(ps, 1)
both = prune_both(g)
stage_up, stage_low = both.stages
print(f"|E| = 40 -> upper keeps {stage_up.output_size} "
      f"(threshold {stage_up.threshold} ~ {float(stage_up.threshold):.2f})")
print(f"        -> lower keeps {both.output_size} "
      f"(threshold {stage_low.threshold} ~ {float(stage_low.threshold):.2f})")
print(f"size guarantees met: {both.size_guarantee_met}")
print(f"max degree inside the final set: {both.internal_max_degree}")

print("""
The upper report also remeasures degrees inside the kept set: the filter's
defining threshold uses degrees in the original E, while the guarantee one
wants downstream is about degrees among survivors, so both readings are
exposed.""")
print(f"upper stage: internal max degree {stage_up.internal_max_degree}, "
      f"bound {stage_up.internal_bound} ~ {float(stage_up.internal_bound):.2f}, "
      f"holds={stage_up.internal_bound_holds}")
