"""Exception hierarchy shared by all gradkit modules.

InputError covers malformed or out-of-range data (CLI exit code 2);
DomainError and its subclasses cover violated preconditions and size
limits (CLI exit code 1).
"""

from __future__ import annotations


class GradKitError(Exception):
    pass


class InputError(GradKitError):
    """Malformed input: bad file line, out-of-range endpoint, loop arc."""


class DomainError(GradKitError):
    """A documented precondition does not hold for the given arguments."""


class OracleLimitError(DomainError):
    """Graph is too large for an exhaustive oracle computation."""


class SizeLimitError(DomainError):
    """Graph is too large for an exhaustive certification or exact solver."""


class InvalidFamilyError(DomainError):
    """Ball family is not a family of disjoint connected vertex sets."""


class NotCenteredError(DomainError):
    """A coloring assumed centered has a component without a unique color."""


class PatternError(DomainError):
    """Pattern graph violates the pattern-module preconditions."""


class DisconnectedError(DomainError):
    """Operation requires a connected input graph."""
