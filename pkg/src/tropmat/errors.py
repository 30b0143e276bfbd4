"""Exception hierarchy.

Every error carries a short machine-readable ``code`` (used by the CLI's
structured error objects) and optionally a ``counterexample`` payload that
is already JSON-serializable.
"""

from __future__ import annotations


class TropmatError(Exception):
    code = "error"

    def __init__(self, detail: str = "", counterexample=None):
        super().__init__(detail)
        self.detail = detail
        self.counterexample = counterexample

    def to_json(self) -> dict:
        out = {"code": self.code, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


class ParseError(TropmatError):
    code = "ParseError"


class DimensionMismatch(TropmatError):
    code = "DimensionMismatch"


class InvertBottom(TropmatError):
    code = "InvertBottom"


class CapExceeded(TropmatError):
    code = "CapExceeded"


# matroids and valuations

class MatroidSyntaxError(TropmatError):
    code = "MatroidSyntaxError"


class ExchangeFailure(TropmatError):
    code = "ExchangeFailure"


class ExchangeValueFailure(TropmatError):
    code = "ExchangeValueFailure"


class SupportMismatch(TropmatError):
    code = "SupportMismatch"


class BadPermutation(TropmatError):
    code = "BadPermutation"


class NotSimple(TropmatError):
    code = "NotSimple"


# linear subgroups

class NotAGroup(TropmatError):
    code = "NotAGroup"


# groups

class GroupTableError(TropmatError):
    code = "GroupTableError"


class ImageMismatch(TropmatError):
    code = "ImageMismatch"


class CocycleOutsideV(TropmatError):
    code = "CocycleOutsideV"


class NotTorsion(TropmatError):
    code = "NotTorsion"


# cones

class ContainsLine(TropmatError):
    code = "ContainsLine"


class NonExtremeRay(TropmatError):
    code = "NonExtremeRay"


# Raised when a computation contradicts a proven structural fact; on valid
# input these must never fire.

class TheoryViolation(TropmatError):
    code = "TheoryViolation"


class PartitionAssertionFailure(TheoryViolation):
    code = "PartitionAssertionFailure"


class MeetAssertionFailure(TheoryViolation):
    code = "MeetAssertionFailure"


class Unsolvable(TheoryViolation):
    code = "Unsolvable"
