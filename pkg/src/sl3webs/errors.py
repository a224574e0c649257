"""Structured errors shared by every module.

Each error carries a stable machine-readable ``kind`` used verbatim by the
CLI's JSON error payloads, so the taxonomy here is part of the wire format.
"""

from __future__ import annotations


class SL3WebsError(Exception):
    """Base class; ``kind`` is the stable identifier exposed on the wire."""

    kind = "Error"

    def payload(self) -> dict:
        return {"error": self.kind, "detail": str(self)}


class NotInLambda(SL3WebsError):
    """Shear vector violates one of the six cone inequalities."""

    kind = "NotInLambda"


class NonIntegral(SL3WebsError):
    """A pants-tuple inversion numerator is not divisible by 6."""

    kind = "NonIntegral"

    def __init__(self, field: str):
        super().__init__(f"numerator for {field} is not divisible by 6")
        self.field = field

    def payload(self) -> dict:
        return {"error": self.kind, "field": self.field}


class ImageViolation(SL3WebsError):
    """Twist tuple falls outside the image monoid of the annulus coordinates."""

    kind = "ImageViolation"


class WordMismatch(SL3WebsError):
    """Boundary word inconsistent with the strand counts of its tuple."""

    kind = "WordMismatch"


class CountMismatch(SL3WebsError):
    """Curve or pants count is wrong for the stated genus."""

    kind = "CountMismatch"


class DanglingSide(SL3WebsError):
    """A (curve, side) pair is referenced by zero or several slots."""

    kind = "DanglingSide"


class Disconnected(SL3WebsError):
    """The pants incidence graph is not connected."""

    kind = "Disconnected"


class BadGenus(SL3WebsError):
    """Genus outside the supported range of the operation."""

    kind = "BadGenus"


class LengthMismatch(SL3WebsError):
    """Coordinate vector lengths do not match the decomposition graph."""

    kind = "LengthMismatch"


class InvalidDescriptor(SL3WebsError):
    """Surface web descriptor violates one of its gluing invariants."""

    kind = "InvalidDescriptor"


class NotInTheta(SL3WebsError):
    """Global coordinate fails membership in the image monoid."""

    kind = "NotInTheta"


class BoxTooLarge(SL3WebsError):
    """Requested enumeration box exceeds the guarded point budget."""

    kind = "BoxTooLarge"


class CounterexampleFound(SL3WebsError):
    """An oracle sweep hit a point violating a verified property.

    Must never occur; any instance is a build-stopping defect.  The offending
    point and the property name are kept for diagnosis.
    """

    kind = "CounterexampleFound"

    def __init__(self, prop: str, point: object):
        super().__init__(f"{prop} violated at {point!r}")
        self.prop = prop
        self.point = point

    def payload(self) -> dict:
        return {"error": self.kind, "property": self.prop, "point": repr(self.point)}
