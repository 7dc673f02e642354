"""Points of F_q^d, planes {x : x . y = t}, and the exact classifier loss.

A hypothesis h_y labels x with 1 exactly when x . y = t. Over F_q^3 with
t != 0 the positive region of h_y is a plane of size q^2 (empty for y = 0),
so the disagreement set of two hypotheses is a symmetric difference of
planes and its size follows from the plane intersection pattern: the loss
is computed in closed form and reported as an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicatePointError,
    ValueOutOfRangeError,
    ZeroNormalError,
    ZeroTError,
)
from .gf import Field, Point


def check_t(t: int, ctx: Field) -> None:
    if t == 0:
        raise ZeroTError("t = 0 is rejected everywhere")
    if not 0 < t < ctx.q:
        raise ValueOutOfRangeError(f"t = {t} outside [1, {ctx.q})")


@dataclass(frozen=True)
class PointSet:
    """An ordered, duplicate-free subset E of F_q^d with stable indices."""

    ctx: Field
    d: int
    points: tuple

    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seen = {}
        for i, pt in enumerate(self.points):
            if len(pt) != self.d:
                raise DimensionMismatchError(
                    f"point {pt} has dimension {len(pt)}, expected {self.d}"
                )
            for c in pt:
                if not 0 <= c < self.ctx.q:
                    raise ValueOutOfRangeError(
                        f"coordinate {c} outside [0, {self.ctx.q}) in point {pt}"
                    )
            if pt in seen:
                raise DuplicatePointError(f"point {pt} appears twice")
            seen[pt] = i
        object.__setattr__(self, "_index", seen)

    @classmethod
    def from_points(cls, ctx: Field, d: int, points) -> "PointSet":
        return cls(ctx, d, tuple(tuple(pt) for pt in points))

    @classmethod
    def full_space(cls, ctx: Field, d: int) -> "PointSet":
        """All q^d points, ordered by integer encoding (coordinate 0 least
        significant base-q digit)."""
        return cls(ctx, d, tuple(decode_point(e, ctx.q, d) for e in range(ctx.q**d)))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        return tuple(pt) in self._index

    def index_of(self, pt) -> int:
        return self._index[tuple(pt)]

    def subset(self, indices) -> "PointSet":
        """New PointSet keeping the given indices, in the given order."""
        return PointSet(self.ctx, self.d, tuple(self.points[i] for i in indices))

    def coord_array(self) -> np.ndarray:
        """|E| x d int64 array of coordinate encodings."""
        return np.asarray(self.points, dtype=np.int64).reshape(len(self.points), self.d)


def decode_point(e: int, q: int, d: int) -> Point:
    coords = []
    for _ in range(d):
        e, r = divmod(e, q)
        coords.append(r)
    return tuple(coords)


def encode_point(pt, q: int) -> int:
    e = 0
    for c in reversed(pt):
        e = e * q + c
    return e


def plane_points(y: Point, t: int, ctx: Field) -> list:
    """All solutions x of x . y = t in F_q^3.

    Exactly q^2 points when y != 0 (solve for the pivot coordinate while the
    other two range freely); empty when y = 0 since 0 . x = 0 != t.
    """
    check_t(t, ctx)
    if len(y) != 3:
        raise DimensionMismatchError("plane operations are specific to d = 3")
    if all(c == 0 for c in y):
        return []
    pivot = next(i for i, c in enumerate(y) if c != 0)
    inv_pivot = ctx.inv(y[pivot])
    free = [i for i in range(3) if i != pivot]
    out = []
    for a in range(ctx.q):
        for b in range(ctx.q):
            x = [0, 0, 0]
            x[free[0]] = a
            x[free[1]] = b
            rhs = ctx.sub(
                t, ctx.add(ctx.mul(a, y[free[0]]), ctx.mul(b, y[free[1]]))
            )
            x[pivot] = ctx.mul(rhs, inv_pivot)
            out.append(tuple(x))
    return out


def plane_intersection_size(y1: Point, y2: Point, t: int, ctx: Field) -> int:
    """|{x : x . y1 = t = x . y2}|: q^2 iff y1 = y2, else q (shared line)
    or 0 (proportional normals give parallel planes)."""
    check_t(t, ctx)
    if len(y1) != 3 or len(y2) != 3:
        raise DimensionMismatchError("plane operations are specific to d = 3")
    if all(c == 0 for c in y1) or all(c == 0 for c in y2):
        raise ZeroNormalError("plane normals must be nonzero")
    if tuple(y1) == tuple(y2):
        return ctx.q**2
    pivot = next(i for i, c in enumerate(y1) if c != 0)
    lam = ctx.mul(y2[pivot], ctx.inv(y1[pivot]))
    if all(y2[i] == ctx.mul(lam, y1[i]) for i in range(3)):
        return 0  # same direction, different plane: x.y2 = t forces x.y1 = t/lam != t
    return ctx.q


@dataclass(frozen=True)
class LossReport:
    """Exact disagreement of two hypotheses under the uniform distribution
    on all of F_q^3."""

    mismatches: int
    total: int
    loss: Fraction


def loss(y: Point, ystar: Point, t: int, ctx: Field) -> LossReport:
    """Exact |{x in F_q^3 : h_y(x) != h_ystar(x)}| / q^3.

    For distinct nonzero normals this is (2q^2 - 2*intersection)/q^3; zero
    normals give the empty plane and are handled as such.
    """
    check_t(t, ctx)
    if len(y) != 3 or len(ystar) != 3:
        raise DimensionMismatchError("loss is specific to d = 3")
    q = ctx.q
    total = q**3
    y_zero = all(c == 0 for c in y)
    ys_zero = all(c == 0 for c in ystar)
    size_y = 0 if y_zero else q**2
    size_ys = 0 if ys_zero else q**2
    if tuple(y) == tuple(ystar):
        inter = size_y
    elif y_zero or ys_zero:
        inter = 0
    else:
        inter = plane_intersection_size(y, ystar, t, ctx)
    mismatches = size_y + size_ys - 2 * inter
    return LossReport(mismatches, total, Fraction(mismatches, total))
