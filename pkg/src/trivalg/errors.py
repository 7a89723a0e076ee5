"""Exception types shared across the package."""

from __future__ import annotations


class TrivalgError(Exception):
    """Base class for all package errors."""


class ValidationError(TrivalgError):
    """A constructor or operation received structurally invalid input."""


class NonTrivalentVertex(ValidationError):
    """A declared trivalent vertex does not have exactly three incidences."""


class LegOnNoCircle(ValidationError):
    """A leg is not assigned to exactly one skeleton circle."""


class DanglingSlot(ValidationError):
    """An incidence slot is not covered by exactly one edge."""


class ParseError(ValidationError):
    """A diagram text block or CLI input could not be parsed."""


class ResourceLimit(TrivalgError):
    """A configured ceiling (class count, matrix size) was exceeded."""


class DegreeMismatch(ValidationError):
    """A formal sum does not match the degree/skeleton of the target space."""


class UnknownDiagram(ValidationError):
    """A diagram code is not part of the target space's enumeration."""


class EmptySkeleton(ValidationError):
    """An operation requiring skeleton circles was given none."""


class NonIntegralEntry(ValidationError):
    """Integer normal form was requested for a matrix with non-integer entries."""


class BadPermutation(ValidationError):
    """The given sequence is not a permutation of the expected index set."""


class LegMultiplicityMismatch(ValidationError):
    """Two trees cannot be glued because their leg/circle profiles differ."""


class IncompleteSpec(ValidationError):
    """A circle-insertion spec does not place every required circle."""


class EdgeOutOfRange(ValidationError):
    """A circle-insertion spec references a nonexistent edge."""


class NotATree(ValidationError):
    """The trivalent part of the diagram is not a (connected, acyclic) tree."""


class SameEnds(ValidationError):
    """Linearization needs two distinct end legs."""


class DegreeTooSmall(ValidationError):
    """A surgery-tree bound was requested below its domain of validity."""


class TooManyLeaves(ValidationError):
    """More special leaves than a tree of this degree can carry."""


class BadSite(ValidationError):
    """A crossing-change site does not designate an edge or leaf of the tree."""
