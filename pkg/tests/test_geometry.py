"""Planes, intersections, exact loss; each checked against exhaustive scans
of the ambient space at small q."""

from fractions import Fraction
from itertools import product

import pytest

from dotvc.errors import (
    DimensionMismatchError,
    DuplicatePointError,
    ValueOutOfRangeError,
    ZeroNormalError,
    ZeroTError,
)
from dotvc.geometry import (
    PointSet,
    decode_point,
    encode_point,
    loss,
    plane_intersection_size,
    plane_points,
)
from dotvc.gf import Field


def brute_plane(y, t, ctx):
    return {
        x
        for x in product(range(ctx.q), repeat=3)
        if ctx.dot(x, y) == t
    }


# -- plane_points -------------------------------------------------------------


def test_plane_examples():
    f5 = Field(5)
    pts = plane_points((1, 0, 0), 1, f5)
    assert len(pts) == 25 and all(x[0] == 1 for x in pts)
    assert plane_points((0, 0, 0), 1, f5) == []
    assert len(plane_points((1, 1, 1), 2, Field(3))) == 9


@pytest.mark.parametrize("p,k", [(3, 1), (2, 2), (5, 1)])
def test_plane_size_and_membership_exhaustive(p, k):
    ctx = Field(p, k)
    q = ctx.q
    for y in product(range(q), repeat=3):
        if y == (0, 0, 0):
            continue
        pts = plane_points(y, 1, ctx)
        assert len(pts) == q * q
        assert set(pts) == brute_plane(y, 1, ctx)


def test_plane_rejects_zero_t_and_wrong_dimension():
    f = Field(5)
    with pytest.raises(ZeroTError):
        plane_points((1, 0, 0), 0, f)
    with pytest.raises(DimensionMismatchError):
        plane_points((1, 0), 1, f)


# -- plane_intersection_size --------------------------------------------------


def test_intersection_examples():
    f5 = Field(5)
    assert plane_intersection_size((1, 0, 0), (0, 1, 0), 1, f5) == 5
    assert plane_intersection_size((1, 0, 0), (1, 0, 0), 1, f5) == 25
    assert plane_intersection_size((1, 0, 0), (2, 0, 0), 1, f5) == 0


def test_intersection_matches_scan_and_never_a_point():
    ctx = Field(3)
    normals = [y for y in product(range(3), repeat=3) if y != (0, 0, 0)]
    for y1 in normals:
        for y2 in normals:
            size = plane_intersection_size(y1, y2, 1, ctx)
            actual = len(brute_plane(y1, 1, ctx) & brute_plane(y2, 1, ctx))
            assert size == actual
            assert size in (0, 3, 9)
            assert (size == 9) == (y1 == y2)


def test_intersection_rejects_zero_normal():
    with pytest.raises(ZeroNormalError):
        plane_intersection_size((0, 0, 0), (1, 0, 0), 1, Field(5))


# -- loss ---------------------------------------------------------------------


def test_loss_examples():
    f5 = Field(5)
    assert loss((1, 0, 0), (1, 0, 0), 1, f5).mismatches == 0
    rep = loss((1, 0, 0), (0, 1, 0), 1, f5)
    assert (rep.mismatches, rep.total) == (40, 125)
    assert rep.loss == Fraction(40, 125)
    assert loss((1, 0, 0), (2, 0, 0), 1, f5).mismatches == 50


def test_loss_exhaustive_scan_all_pairs_q3():
    ctx = Field(3)
    space = list(product(range(3), repeat=3))
    for y in space:
        py = brute_plane(y, 1, ctx)
        for ystar in space:
            pys = brute_plane(ystar, 1, ctx)
            rep = loss(y, ystar, 1, ctx)
            assert rep.mismatches == len(py ^ pys)
            assert rep.total == 27
            # symmetry
            assert loss(ystar, y, 1, ctx).mismatches == rep.mismatches


def test_loss_closed_form_distinct_nonzero():
    ctx = Field(3)
    q = 3
    nz = [y for y in product(range(q), repeat=3) if y != (0, 0, 0)]
    for y in nz:
        for ystar in nz:
            if y == ystar:
                continue
            inter = plane_intersection_size(y, ystar, 1, ctx)
            assert loss(y, ystar, 1, ctx).mismatches == 2 * q * q - 2 * inter


def test_loss_rejects_zero_t():
    with pytest.raises(ZeroTError):
        loss((1, 0, 0), (0, 1, 0), 0, Field(5))


# -- PointSet -----------------------------------------------------------------


def test_pointset_validation():
    f = Field(5)
    with pytest.raises(DuplicatePointError):
        PointSet.from_points(f, 3, [(1, 0, 0), (1, 0, 0)])
    with pytest.raises(ValueOutOfRangeError):
        PointSet.from_points(f, 3, [(7, 0, 0)])
    with pytest.raises(DimensionMismatchError):
        PointSet.from_points(f, 3, [(1, 0)])


def test_pointset_indexing_and_subset():
    f = Field(5)
    ps = PointSet.from_points(f, 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert len(ps) == 3
    assert ps.index_of((0, 1, 0)) == 1
    sub = ps.subset([2, 0])
    assert sub.points == ((0, 0, 1), (1, 0, 0))
    assert (0, 1, 0) not in sub


def test_full_space_follows_encoding_order():
    f = Field(3)
    ps = PointSet.full_space(f, 3)
    assert len(ps) == 27
    for e in (0, 1, 13, 26):
        assert ps[e] == decode_point(e, 3, 3)
        assert encode_point(ps[e], 3) == e
