"""Exception hierarchy.

Every error carries a machine-readable ``code`` (the class name) so the CLI can
emit ``{"error": code, "detail": ...}`` without a lookup table.
"""

from __future__ import annotations


class RigIsocError(Exception):
    """Base class for all validation and computation errors."""

    @property
    def code(self) -> str:
        return type(self).__name__

    @property
    def detail(self) -> str:
        return str(self.args[0]) if self.args else ""


# groups
class ClosureTooLarge(RigIsocError):
    pass


class InvalidGroup(RigIsocError):
    pass


class NotAHomomorphism(RigIsocError):
    pass


class ActionAxiomViolation(RigIsocError):
    pass


# levels
class NotSurjective(RigIsocError):
    pass


class DenominatorNotDivisible(RigIsocError):
    pass


# characters / objects
class DenominatorExceedsLevel(RigIsocError):
    pass


class LevelMismatch(RigIsocError):
    pass


class TowerTooShort(RigIsocError):
    pass


class NotPrimitive(RigIsocError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NonOrbitStableSupport(RigIsocError):
    pass


class NonConstantOnOrbit(RigIsocError):
    pass


class IndivisibleMultiplicity(RigIsocError):
    pass


class InvalidDimension(RigIsocError):
    pass


class SumNotInOneOverS(RigIsocError):
    pass


# cohomology
class ArityMismatch(RigIsocError):
    pass


class GroupMismatch(RigIsocError):
    pass


class ShapeMismatch(RigIsocError):
    pass


# symbolic
class InvalidDatum(RigIsocError):
    pass


class NoCanonicalFrobenius(RigIsocError):
    pass


class SectionNotWellDefined(RigIsocError):
    pass


class RewriteNotWellDefined(RigIsocError):
    pass


# cli / enumeration
class BoundTooLarge(RigIsocError):
    pass


class UnknownName(RigIsocError):
    pass
