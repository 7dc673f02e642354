#!/usr/bin/env python3
"""Planes {x : x.y = t} and the exact loss between two plane classifiers.

The hypothesis h_y labels x positively when x.y = t. With t != 0 every
nonzero y carves out a plane of exactly q^2 points of F_q^3, two distinct
planes with the same t share a line (q points) or nothing, and the
disagreement between two hypotheses is the symmetric difference of their
planes - computable in closed form and reported as an exact rational.
"""

from fractions import Fraction

from dotvc import Field, loss, plane_intersection_size, plane_points

q = 5
ctx = Field(q)

print(f"== planes in F_{q}^3, t = 1 ==")
for y in [(1, 0, 0), (1, 1, 1), (2, 4, 3)]:
    pts = plane_points(y, 1, ctx)
    print(f"|plane({y})| = {len(pts)}  (q^2 = {q * q})")
print(f"|plane((0,0,0))| = {len(plane_points((0, 0, 0), 1, ctx))}  (empty: 0.x != 1)")

print("\n== pairwise intersections ==")
cases = [((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (1, 0, 0)), ((1, 0, 0), (2, 0, 0))]
for y1, y2 in cases:
    size = plane_intersection_size(y1, y2, 1, ctx)
    kind = {q * q: "same plane", q: "shared line", 0: "parallel"}[size]
    print(f"plane({y1}) & plane({y2}): {size:3d} points  ({kind})")

print("\n== exact loss under the uniform distribution on F_q^3 ==")
for y, ystar in [((1, 0, 0), (1, 0, 0)), ((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (2, 0, 0))]:
    rep = loss(y, ystar, 1, ctx)
    print(f"loss(h_{y}, h_{ystar}) = {rep.mismatches}/{rep.total} = {rep.loss}")

print("""
Any wrong hypothesis pays between 2/q - 2/q^2 (planes sharing a line) and
2/q (parallel planes), so an accuracy target just below 1/q forces the
learner to the exact plane: for these classifiers, approximately correct
means correct.""")
worst = Fraction(2, q)
best = Fraction(2, q) - Fraction(2, q * q)
print(f"at q = {q}: wrong-hypothesis loss range [{best}, {worst}], target 1/q = {Fraction(1, q)}")
