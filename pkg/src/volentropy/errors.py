"""Typed errors raised by the volentropy pipeline.

Every failure mode callers are expected to handle has its own class so the
CLI can map them to exit codes and tests can assert on them precisely.
"""


class PresentationSyntaxError(ValueError):
    """Input does not satisfy the presentation syntax conventions."""


class NotGeometricError(Exception):
    """The presentation cannot come from a planar Cayley 2-complex."""

    def __init__(self, reason, generator=None, count=None):
        super().__init__(reason)
        self.reason = reason
        self.generator = generator
        self.count = count


class InternalInconsistencyError(Exception):
    """A structural invariant failed after the input passed validation.

    Signals a non-geometric structure that slipped through the earlier
    checks, or a bug; never expected on geometric input.
    """


class IterationCapExceededError(InternalInconsistencyError):
    """Bigon boundary gluing did not reach even length within the cap."""


class TieUnresolvedError(InternalInconsistencyError):
    """The symbolic endpoint comparison exceeded its depth bound."""


class AddressUndecidableError(InternalInconsistencyError):
    """An orbit point's image lies outside both halves of a split lap."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division requested where the divisor does not divide."""


class NoRootInUnitIntervalError(Exception):
    """The kneading determinant has no zero in (0, 1)."""


class OutOfBuiltRegionError(Exception):
    """A path left the face-complete part of the tiling ball."""


class InconsistentClosureError(Exception):
    """A face walk contradicted the existing slot or chirality structure."""
