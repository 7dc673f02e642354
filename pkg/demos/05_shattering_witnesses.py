#!/usr/bin/env python3
"""Shattering, brute-force VC dimension, and constructive witnesses.

A set C is shattered when every labeling of C is realized by some
hypothesis h_y, y in E. No 4-point subset can ever shatter here (three
points pin down a plane), so the interesting question is whether some
triple does. A shattered triple is certified by an 11-point witness: one
label point per subset of {x1,x2,x3} plus an off-all-planes point, and the
certificate is checked field by field, independent of the search.
"""

from dataclasses import replace

from dotvc import (
    Field,
    PointSet,
    build_graph,
    find_vc2_witness,
    find_vc3_witness,
    plane_points,
    shatters,
    vc_dimension,
    witness_verify,
)

print("== exhaustive VC dimension at q = 3 ==")
ctx3 = Field(3)
g3 = build_graph(PointSet.full_space(ctx3, 3), 1)
res = vc_dimension(g3, 4)
print(f"VC dimension of the full space F_3^3: {res.dimension} "
      f"(truncated={res.truncated})")
print("so already at the smallest odd q the full space realizes dimension 3")

print("\n== an 11-point certificate at q = 5 ==")
ctx5 = Field(5)
g5 = build_graph(PointSet.full_space(ctx5, 3), 1)
w = find_vc3_witness(g5, strategy="exhaustive")
for name in w.__dataclass_fields__:
    print(f"  {name:>5} = {getattr(w, name)}")
ok, violations = witness_verify(w, g5)
print(f"verified: {ok}")
idx = [g5.set.index_of(p) for p in (w.x1, w.x2, w.x3)]
print(f"shatters({{x1, x2, x3}}): {shatters(g5, idx)}")

print("\n== tampering is caught ==")
bad = replace(w, ystar=w.x1)  # x1 . x1 = t would make ystar label x1
ok, violations = witness_verify(bad, g5)
print(f"verified: {ok}, violations: {violations}")

print("\n== degenerate inputs return absence, not errors ==")
one_plane = PointSet.from_points(ctx3, 3, plane_points((1, 0, 0), 1, ctx3))
g_plane = build_graph(one_plane, 1)
print(f"E = a single plane at q=3: vc3 witness -> "
      f"{find_vc3_witness(g_plane, strategy='exhaustive')}")
two = PointSet.from_points(ctx5, 3, [(1, 0, 0), (1, 1, 0)])
print(f"E = two points: vc2 witness -> {find_vc2_witness(build_graph(two, 1))}")

print("\n== pair witnesses come cheaper ==")
w2 = find_vc2_witness(g5)
print(f"x1={w2.x1} x2={w2.x2} y12={w2.y12} y1={w2.y1} y2={w2.y2} ystar={w2.ystar}")
print(f"verified: {witness_verify(w2, g5)[0]}")
