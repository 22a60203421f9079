"""Exception hierarchy shared by every comax module."""

from __future__ import annotations


class ComaxError(Exception):
    """Base class for all toolkit errors."""


class InvalidSpecError(ComaxError, ValueError):
    """A ring specification is malformed or violates a constructor precondition."""


class SizeLimitError(ComaxError):
    """A construction would exceed the configured element cap."""


class RingAxiomError(ComaxError):
    """Tables handed to the table-ring constructor are not a unital ring."""

    def __init__(self, axiom: str, witness: tuple[int, ...] = ()):
        self.axiom = axiom
        self.witness = witness
        detail = f" (witness {witness})" if witness else ""
        super().__init__(f"{axiom}{detail}")


class PreconditionError(ComaxError, ValueError):
    """An operation was called outside its documented domain."""


class UnsupportedError(ComaxError):
    """The requested construction only exists under hypotheses the input lacks."""


class FalsificationError(ComaxError):
    """A computed object contradicts a published theorem or construction.

    This should never be raised on correct input; when it is, ``witness``
    carries everything needed to reproduce the counterexample.
    """

    def __init__(self, message: str, witness: dict | None = None):
        self.witness = witness or {}
        super().__init__(message)
