"""Exact coordinates for web laminations in a pair of pants.

A pair of pants (thrice-punctured sphere) carries a unique ideal
triangulation with two triangles.  A lamination in it is described by eight
integer shear coordinates, one per marked point: two points on each of the
three edges, labeled ``11, 12, 21, 22, 31, 32`` (first index = adjacent
boundary component, 1..3), plus one point in each triangle, labeled ``v``
(front triangle) and ``v'`` (back triangle, stored as ``xvp``).  Swapping the
roles of the two triangles negates the twist coordinate ``tP`` and nothing
else; this module fixes ``v`` = front throughout.

The realizable shear vectors form the cone of integer points satisfying

    x11 + x32 >= 0        x12 + x31 + xv + xv' >= 0
    x31 + x22 >= 0        x32 + x21 + xv + xv' >= 0
    x21 + x12 >= 0        x22 + x11 + xv + xv' >= 0

(`lambda_check`).  The six left-hand sides are exactly the counts ``n_tj`` of
web endpoints on boundary component ``t`` pointing towards (j = 1) or away
from (j = 2) that component, so cone membership is equivalent to the
nonnegativity of the intersection entries of `forward_unchecked`.

`forward` repackages a shear vector into the pants tuple

    (n11, n12, n21, n22, n31, n32, tP, hP)

with twist ``tP = xv - xv'`` and height
``hP = x11 - x12 + x21 - x22 + x31 - x32``.  This linear change of basis is
invertible over Q with denominator 6 (`invert`), and a pants tuple comes from
an integral cone point iff it satisfies the five conditions of `image_check`.
Everything here is exact integer arithmetic; no floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonIntegral, NotInLambda

SHEAR_FIELDS = ("x11", "x12", "x21", "x22", "x31", "x32", "xv", "xvp")
TUPLE_FIELDS = ("n11", "n12", "n21", "n22", "n31", "n32", "tP", "hP")


def _int_field(data: dict, key: str) -> int:
    try:
        value = data[key]
    except KeyError:
        raise KeyError(f"missing field {key!r}") from None
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"field {key!r} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class ShearVector:
    """Integer shear coordinates at the eight marked points of the pants."""

    x11: int
    x12: int
    x21: int
    x22: int
    x31: int
    x32: int
    xv: int
    xvp: int

    @classmethod
    def zero(cls) -> "ShearVector":
        return cls(0, 0, 0, 0, 0, 0, 0, 0)

    @classmethod
    def from_dict(cls, data: dict) -> "ShearVector":
        return cls(*(_int_field(data, k) for k in SHEAR_FIELDS))

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in SHEAR_FIELDS}

    def __add__(self, other: "ShearVector") -> "ShearVector":
        return ShearVector(*(getattr(self, k) + getattr(other, k) for k in SHEAR_FIELDS))


@dataclass(frozen=True, slots=True)
class PantsTuple:
    """Pants coordinates: six boundary intersection counts, twist, height.

    Tuples describing an actual lamination have all ``n`` entries >= 0; the
    constructor does not enforce this so that `forward_unchecked` can return
    raw signed linear output.  Membership is decided by `image_check`.
    """

    n11: int
    n12: int
    n21: int
    n22: int
    n31: int
    n32: int
    tP: int
    hP: int

    @classmethod
    def zero(cls) -> "PantsTuple":
        return cls(0, 0, 0, 0, 0, 0, 0, 0)

    @classmethod
    def from_dict(cls, data: dict) -> "PantsTuple":
        return cls(*(_int_field(data, k) for k in TUPLE_FIELDS))

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in TUPLE_FIELDS}

    def __add__(self, other: "PantsTuple") -> "PantsTuple":
        return PantsTuple(*(getattr(self, k) + getattr(other, k) for k in TUPLE_FIELDS))


def forward_unchecked(x: ShearVector) -> PantsTuple:
    """Apply the linear change of basis with no cone check.

    Total on all integer vectors; the six intersection entries may be
    negative when ``x`` lies outside the cone.
    """
    return PantsTuple(
        n11=x.x11 + x.x32,
        n12=x.x12 + x.x31 + x.xv + x.xvp,
        n21=x.x31 + x.x22,
        n22=x.x32 + x.x21 + x.xv + x.xvp,
        n31=x.x21 + x.x12,
        n32=x.x22 + x.x11 + x.xv + x.xvp,
        tP=x.xv - x.xvp,
        hP=x.x11 - x.x12 + x.x21 - x.x22 + x.x31 - x.x32,
    )


def forward(x: ShearVector) -> PantsTuple:
    """Pants tuple of a cone point.

    Raises NotInLambda if any computed intersection entry is negative,
    i.e. when ``x`` violates a cone inequality.
    """
    t = forward_unchecked(x)
    if min(t.n11, t.n12, t.n21, t.n22, t.n31, t.n32) < 0:
        raise NotInLambda(f"shear vector outside the cone: {x.to_dict()}")
    return t


def lambda_check(x: ShearVector) -> bool:
    """True iff ``x`` satisfies all six cone inequalities."""
    return (
        x.x11 + x.x32 >= 0
        and x.x12 + x.x31 + x.xv + x.xvp >= 0
        and x.x31 + x.x22 >= 0
        and x.x32 + x.x21 + x.xv + x.xvp >= 0
        and x.x21 + x.x12 >= 0
        and x.x22 + x.x11 + x.xv + x.xvp >= 0
    )


# Inversion numerators, in SHEAR_FIELDS order.  All denominators are 6.
def _numerators(t: PantsTuple) -> tuple[int, ...]:
    return (
        t.hP + 3 * t.n11 - t.n21 - 2 * t.n22 + t.n31 + 2 * t.n32,
        -t.hP + t.n11 + 2 * t.n12 - t.n21 - 2 * t.n22 + 3 * t.n31,
        t.hP - t.n11 - 2 * t.n12 + t.n21 + 2 * t.n22 + 3 * t.n31,
        -t.hP - t.n11 - 2 * t.n12 + 3 * t.n21 + t.n31 + 2 * t.n32,
        t.hP + t.n11 + 2 * t.n12 + 3 * t.n21 - t.n31 - 2 * t.n32,
        -t.hP + 3 * t.n11 + t.n21 + 2 * t.n22 - t.n31 - 2 * t.n32,
        3 * t.tP - t.n11 + t.n12 - t.n21 + t.n22 - t.n31 + t.n32,
        -3 * t.tP - t.n11 + t.n12 - t.n21 + t.n22 - t.n31 + t.n32,
    )


def invert(t: PantsTuple) -> ShearVector:
    """Shear vector with ``forward(invert(t)) == t``, exactly.

    Raises NonIntegral (naming the first offending coordinate) when some
    numerator is not divisible by 6, and NotInLambda when the result is
    integral but falls outside the cone.  Neither can happen when
    `image_check` holds; the cone failure is raised rather than ignored so
    that oracle sweeps stay diagnosable.
    """
    nums = _numerators(t)
    for field, num in zip(SHEAR_FIELDS, nums):
        if num % 6:
            raise NonIntegral(field)
    x = ShearVector(*(num // 6 for num in nums))
    if not lambda_check(x):
        raise NotInLambda(f"integral preimage outside the cone: {x.to_dict()}")
    return x


def image_check(t: PantsTuple) -> bool:
    """Membership test for the image monoid of `forward` on cone points.

    Five conditions: the six nonnegativities, the mod-3 balance of the two
    column sums, the parity of ``hP`` against the first column sum, the mod-3
    congruence of ``hP``, and the mod-6 congruence of ``3 tP``.
    """
    if min(t.n11, t.n12, t.n21, t.n22, t.n31, t.n32) < 0:
        return False
    col1 = t.n11 + t.n21 + t.n31
    col2 = t.n12 + t.n22 + t.n32
    return (
        (col2 - col1) % 3 == 0
        and (t.hP + col1) % 2 == 0
        and (t.hP - (t.n11 - t.n12 - t.n21 + t.n22)) % 3 == 0
        and (3 * t.tP - (col2 - col1)) % 6 == 0
    )


def rotate(t: PantsTuple) -> PantsTuple:
    """Cyclically permute boundary roles 1 -> 2 -> 3 -> 1; twist and height fixed.

    Order 3, and `image_check` is invariant under it, which is what makes the
    membership test independent of which boundary component is listed first.
    """
    return PantsTuple(
        n11=t.n31,
        n12=t.n32,
        n21=t.n11,
        n22=t.n12,
        n31=t.n21,
        n32=t.n22,
        tP=t.tP,
        hP=t.hP,
    )


def boundary_counts(x: ShearVector, boundary: int) -> tuple[int, int]:
    """Endpoint counts on boundary component ``boundary`` (1..3) of a cone point.

    Returns ``(n_t1, n_t2)``: endpoints pointing towards / away from the
    component.  Raises NotInLambda when ``x`` violates a cone inequality.
    """
    if boundary not in (1, 2, 3):
        raise ValueError(f"boundary index must be 1, 2 or 3, got {boundary}")
    if not lambda_check(x):
        raise NotInLambda(f"shear vector outside the cone: {x.to_dict()}")
    t = forward_unchecked(x)
    if boundary == 1:
        return t.n11, t.n12
    if boundary == 2:
        return t.n21, t.n22
    return t.n31, t.n32
